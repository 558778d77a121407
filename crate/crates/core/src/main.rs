fn main() {
    std::process::exit(abcover::cli::run(std::env::args_os()));
}
