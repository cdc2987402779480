fn main() {
    std::process::exit(ce_lab::cli::run(std::env::args_os()));
}
