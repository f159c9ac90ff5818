fn main() {
    std::process::exit(symplectica::cli::main_with_args(std::env::args_os()));
}
