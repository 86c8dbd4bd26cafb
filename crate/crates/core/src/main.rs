fn main() {
    std::process::exit(regalg::cli::run(std::env::args_os()));
}
