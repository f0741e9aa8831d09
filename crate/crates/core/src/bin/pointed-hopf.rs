fn main() {
    std::process::exit(pointed_hopf::cli::main_with_args(std::env::args_os()));
}
