fn main() {
    std::process::exit(subfield_metric::cli::main_with_args(std::env::args_os()));
}
