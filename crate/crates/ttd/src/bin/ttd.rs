fn main() {
    std::process::exit(ttd::cli::run(std::env::args().collect()));
}
