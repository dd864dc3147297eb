//! Brute force inside tensor powers of the standard module `V` of `U_q(gl_N)`.

pub mod oracle;
pub mod tensor;

pub use oracle::{
    column_reading_word, highest_weight_vector, mu_singular_vectors, verify_theorem61, BoxRecord, MuSingular,
    Theorem61Report,
};
pub use tensor::{check_tensor_relations, tensor_act, tensor_act_all, tensor_act_right, tensor_form, TensorVector};
