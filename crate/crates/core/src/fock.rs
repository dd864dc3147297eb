//! The `v`-deformed Fock space and the Misra-Miwa action of `U'_v(sl_ell^)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::partition::{n_left, n_right, Partition};
use crate::ring::{LaurentQ, Var};

/// Finite formal sum of partitions with Laurent-in-`v` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentQ>,
}

fn v_pow(e: i64) -> LaurentQ {
    LaurentQ::x_pow(Var::V, e)
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lam: Partition) -> Self {
        let mut x = Self::zero();
        x.add_term(lam, LaurentQ::one(Var::V));
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentQ)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> LaurentQ {
        self.terms.get(lam).cloned().unwrap_or_else(|| LaurentQ::zero(Var::V))
    }

    pub fn add_term(&mut self, lam: Partition, c: LaurentQ) {
        if c.is_zero() {
            return;
        }
        let c = c.with_var(Var::V);
        match self.terms.get_mut(&lam) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    self.terms.remove(&lam);
                }
            }
            None => {
                self.terms.insert(lam, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentQ::from_int(Var::V, -1)))
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    fn map_basis<F: Fn(&Partition) -> Vec<(Partition, LaurentQ)>>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (lam, c) in &self.terms {
            for (mu, a) in f(lam) {
                out.add_term(mu, c * &a);
            }
        }
        out
    }
}

impl fmt::Display for FockVector {
    /// `v^-1*|1,1> + |2>`, sorted by partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            let ket = format!("|{lam}>");
            if i > 0 {
                out.push_str(" + ");
            }
            if c.is_one() {
                out.push_str(&ket);
            } else if c.is_monomial() {
                out.push_str(&format!("{c}*{ket}"));
            } else {
                out.push_str(&format!("({c})*{ket}"));
            }
        }
        write!(f, "{out}")
    }
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            partition: &'a Partition,
            coeff: &'a LaurentQ,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (partition, coeff) in &self.terms {
            seq.serialize_element(&Entry { partition, coeff })?;
        }
        seq.end()
    }
}

fn check_args(i: u32, ell: u32) {
    assert!(ell >= 2, "ell must be at least 2");
    assert!(i < ell, "residue {i} out of range for ell = {ell}");
}

/// `F_i |lam> = sum v^{N^l(mu/lam)} |mu>` over `mu = lam + (i-colored box)`.
pub fn apply_f(i: u32, x: &FockVector, ell: u32) -> FockVector {
    check_args(i, ell);
    x.map_basis(|lam| {
        lam.addable_boxes(ell, Some(i))
            .into_iter()
            .map(|b| (lam.add_box(b).unwrap(), v_pow(n_left(lam, b, ell).unwrap())))
            .collect()
    })
}

/// `E_i |lam> = sum v^{-N^r(lam/mu)} |mu>` over `mu = lam - (i-colored box)`.
pub fn apply_e(i: u32, x: &FockVector, ell: u32) -> FockVector {
    check_args(i, ell);
    x.map_basis(|lam| {
        lam.removable_boxes(ell, Some(i))
            .into_iter()
            .map(|b| {
                let mu = lam.remove_box(b).unwrap();
                let e = -n_right(&mu, b, ell).unwrap();
                (mu, v_pow(e))
            })
            .collect()
    })
}

/// Exponent `|A_i(lam)| - |R_i(lam)|` of the `K_i` eigenvalue.
pub fn k_exponent(i: u32, lam: &Partition, ell: u32) -> i64 {
    lam.addable_boxes(ell, Some(i)).len() as i64 - lam.removable_boxes(ell, Some(i)).len() as i64
}

/// `K_i^{sign}` with `sign` = 1 or −1.
pub fn apply_k_pow(i: u32, x: &FockVector, ell: u32, sign: i64) -> FockVector {
    check_args(i, ell);
    x.map_basis(|lam| vec![(lam.clone(), v_pow(sign * k_exponent(i, lam, ell)))])
}

pub fn apply_k(i: u32, x: &FockVector, ell: u32) -> FockVector {
    apply_k_pow(i, x, ell, 1)
}

/// Entry `a_ij` of the affine Cartan matrix of type `A_{ell-1}^{(1)}`.
pub fn cartan(i: u32, j: u32, ell: u32) -> i64 {
    if i == j {
        return 2;
    }
    let adjacent = (i + 1) % ell == j || (j + 1) % ell == i;
    match (ell, adjacent) {
        (2, _) => -2,
        (_, true) => -1,
        _ => 0,
    }
}

/// `[n]_v`
fn v_int(n: i64) -> LaurentQ {
    let m = n.abs();
    let s = n.signum();
    LaurentQ::from_terms(Var::V, (0..m).map(|j| (m - 1 - 2 * j, s)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub ell: u32,
    pub max_size: u32,
    pub relations_checked: usize,
    pub passed: bool,
    pub first_counterexample: Option<String>,
}

/// Check the defining relations of `U'_v(sl_ell^)` on every `|lam>` with `|lam| <= max_size`.
pub fn check_relations(ell: u32, max_size: u32) -> RelationReport {
    let parts = Partition::all_up_to(max_size);
    let results: Vec<(usize, Option<String>)> = parts.par_iter().map(|lam| check_on(lam, ell)).collect();
    let relations_checked = results.iter().map(|r| r.0).sum();
    let first_counterexample = results.into_iter().find_map(|r| r.1);
    RelationReport { ell, max_size, relations_checked, passed: first_counterexample.is_none(), first_counterexample }
}

fn check_on(lam: &Partition, ell: u32) -> (usize, Option<String>) {
    let x = FockVector::basis(lam.clone());
    let e = |i, y: &FockVector| apply_e(i, y, ell);
    let f = |i, y: &FockVector| apply_f(i, y, ell);
    let k = |i, y: &FockVector, s| apply_k_pow(i, y, ell, s);
    let mut count = 0;
    let mut fail = |name: String, lhs: FockVector, rhs: FockVector| -> Option<String> {
        count += 1;
        if lhs == rhs {
            None
        } else {
            Some(format!("{name} on |{lam}>: {lhs} != {rhs}"))
        }
    };
    for i in 0..ell {
        for j in 0..ell {
            let a = cartan(i, j, ell);
            let comm = e(i, &f(j, &x)).sub(&f(j, &e(i, &x)));
            let rhs = if i == j { x.scale(&v_int(k_exponent(i, lam, ell))) } else { FockVector::zero() };
            if let Some(m) = fail(format!("[E_{i}, F_{j}]"), comm, rhs) {
                return (count, Some(m));
            }
            let ke = k(i, &e(j, &k(i, &x, -1)), 1);
            if let Some(m) = fail(format!("K_{i} E_{j} K_{i}^-1"), ke, e(j, &x).scale(&v_pow(a))) {
                return (count, Some(m));
            }
            let kf = k(i, &f(j, &k(i, &x, -1)), 1);
            if let Some(m) = fail(format!("K_{i} F_{j} K_{i}^-1"), kf, f(j, &x).scale(&v_pow(-a))) {
                return (count, Some(m));
            }
            if i != j && a == 0 {
                let ee = e(i, &e(j, &x)).sub(&e(j, &e(i, &x)));
                if let Some(m) = fail(format!("[E_{i}, E_{j}]"), ee, FockVector::zero()) {
                    return (count, Some(m));
                }
                let ff = f(i, &f(j, &x)).sub(&f(j, &f(i, &x)));
                if let Some(m) = fail(format!("[F_{i}, F_{j}]"), ff, FockVector::zero()) {
                    return (count, Some(m));
                }
            }
            if ell >= 3 && a == -1 {
                let two = v_int(2);
                let serre = |g: &dyn Fn(u32, &FockVector) -> FockVector| {
                    let t1 = g(i, &g(i, &g(j, &x)));
                    let t2 = g(i, &g(j, &g(i, &x))).scale(&two);
                    let t3 = g(j, &g(i, &g(i, &x)));
                    t1.sub(&t2).add(&t3)
                };
                if let Some(m) = fail(format!("Serre E_{i} E_{j}"), serre(&e), FockVector::zero()) {
                    return (count, Some(m));
                }
                if let Some(m) = fail(format!("Serre F_{i} F_{j}"), serre(&f), FockVector::zero()) {
                    return (count, Some(m));
                }
            }
        }
    }
    (count, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket(s: &str) -> FockVector {
        FockVector::basis(s.parse().unwrap())
    }

    #[test]
    fn action_on_small_partitions() {
        assert_eq!(apply_f(0, &ket(""), 2), ket("1"));
        assert!(apply_f(1, &ket(""), 2).is_zero());
        assert_eq!(apply_f(1, &ket("1"), 2).to_string(), "v^-1*|1,1> + |2>");
        assert_eq!(apply_e(0, &ket("1"), 2), ket(""));
        assert_eq!(apply_e(1, &ket("2"), 2).to_string(), "v*|1>");
        assert_eq!(apply_e(1, &ket("1,1"), 2), ket("1"));
    }

    #[test]
    fn k_eigenvalues() {
        assert_eq!(apply_k(0, &ket(""), 2).to_string(), "v*|>");
        assert_eq!(apply_k(1, &ket("1"), 2).to_string(), "v^2*|1>");
        assert_eq!(apply_k(1, &ket(""), 2), ket(""));
    }

    #[test]
    fn relations_small() {
        for ell in 2..=4 {
            let r = check_relations(ell, 4);
            assert!(r.passed, "{:?}", r.first_counterexample);
        }
    }
}
