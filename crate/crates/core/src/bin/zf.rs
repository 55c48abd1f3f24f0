fn main() {
    std::process::exit(zf_core::cli::run(std::env::args_os()));
}
