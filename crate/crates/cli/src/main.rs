fn main() {
    std::process::exit(eqgc_cli::main_with_args(std::env::args_os()));
}
