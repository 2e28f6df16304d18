fn main() {
    std::process::exit(catalan_magma::cli::main_with_std());
}
