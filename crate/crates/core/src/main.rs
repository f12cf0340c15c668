fn main() {
    std::process::exit(twirl::cli::main_with_args(std::env::args_os()));
}
