fn main() {
    std::process::exit(coloring_complex::cli::run(std::env::args_os()));
}
