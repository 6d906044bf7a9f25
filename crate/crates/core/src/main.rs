fn main() {
    std::process::exit(confcoh::cli::run());
}
