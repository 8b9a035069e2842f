fn main() {
    std::process::exit(clifford_morita::run())
}
