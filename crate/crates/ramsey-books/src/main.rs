fn main() {
    std::process::exit(ramsey_books::cli::cli_main(std::env::args()));
}
