fn main() {
    std::process::exit(ksub_cli::run(std::env::args_os()));
}
