fn main() {
    std::process::exit(ncmotives::cli::run(std::env::args()));
}
