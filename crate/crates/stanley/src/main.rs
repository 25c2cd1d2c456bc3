fn main() {
    std::process::exit(stanley::cli::run());
}
