fn main() {
    std::process::exit(api_ruler::cli::main());
}
