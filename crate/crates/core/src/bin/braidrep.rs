fn main() {
    std::process::exit(braidrep::cli::main_with_args(std::env::args_os()));
}
