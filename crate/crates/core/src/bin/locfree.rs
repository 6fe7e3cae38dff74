fn main() {
    std::process::exit(locfree::cli::run(std::env::args_os()));
}
