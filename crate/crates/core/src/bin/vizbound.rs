fn main() {
    std::process::exit(vizbound::cli::run(std::env::args_os()));
}
