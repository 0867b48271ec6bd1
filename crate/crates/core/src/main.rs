fn main() {
    std::process::exit(tight_brieskorn::cli::run(std::env::args_os()));
}
