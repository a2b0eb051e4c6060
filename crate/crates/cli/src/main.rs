fn main() {
    std::process::exit(tgr_cli::run(std::env::args_os()));
}
