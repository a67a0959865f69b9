fn main() {
    let code = torus_scatter::cli::run(std::env::args_os());
    std::process::exit(code);
}
