fn main() {
    std::process::exit(verlinde::cli::run(std::env::args_os()));
}
