fn main() {
    std::process::exit(gelfand::cli::run(std::env::args_os()));
}
