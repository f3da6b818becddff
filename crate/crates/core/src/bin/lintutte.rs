fn main() {
    std::process::exit(lintutte::cli::main_with(std::env::args_os()));
}
