fn main() {
    std::process::exit(skewpos_cli::main_with(std::env::args()));
}
