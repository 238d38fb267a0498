fn main() {
    std::process::exit(gehrhart_cli::run(std::env::args_os()));
}
