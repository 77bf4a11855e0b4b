fn main() {
    std::process::exit(tfds::cli::main_with_args(std::env::args_os()));
}
