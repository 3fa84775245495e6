fn main() {
    let code = regprod_cli::run(std::env::args().skip(1));
    std::process::exit(code);
}
