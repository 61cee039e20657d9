fn main() {
    std::process::exit(mocktheta::cli::run(std::env::args_os()));
}
