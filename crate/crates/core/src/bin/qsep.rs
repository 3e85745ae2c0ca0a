fn main() {
    std::process::exit(qsep::cli::main_with_args(std::env::args_os()));
}
