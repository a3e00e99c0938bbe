fn main() {
    std::process::exit(polyff::cli::main());
}
