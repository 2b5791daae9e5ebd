fn main() {
    std::process::exit(eigenbound::cli::run(std::env::args_os()));
}
