fn main() {
    std::process::exit(gamma_sharp::cli::run(std::env::args_os()));
}
