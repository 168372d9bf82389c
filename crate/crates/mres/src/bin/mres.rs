fn main() {
    std::process::exit(mres::cli::run(std::env::args_os()));
}
