fn main() {
    std::process::exit(quiverlab::cli::main_with_std());
}
