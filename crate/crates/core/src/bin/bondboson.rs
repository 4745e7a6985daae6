fn main() {
    std::process::exit(bondboson::cli::run(std::env::args_os()));
}
