fn main() {
    std::process::exit(scatalan::cli::run());
}
