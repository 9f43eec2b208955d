fn main() {
    std::process::exit(unbraid::cli::run());
}
