fn main() {
    std::process::exit(fockweyl::cli::main());
}
