fn main() {
    std::process::exit(cover_algebra::cli::run_main());
}
