fn main() {
    std::process::exit(dendriform_fp::cli::run(std::env::args_os()));
}
