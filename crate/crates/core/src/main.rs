fn main() {
    std::process::exit(cutnorm::cli::run(std::env::args_os()));
}
