fn main() {
    std::process::exit(liaison::cli::main_with_args(std::env::args_os()));
}
