fn main() {
    std::process::exit(stabtherm::cli::main_with_args(std::env::args_os().collect()));
}
