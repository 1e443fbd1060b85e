fn main() {
    std::process::exit(zassenhaus_psl2::cli::run(std::env::args_os()));
}
