fn main() {
    std::process::exit(wsqopt::cli::main_with(std::env::args_os()));
}
