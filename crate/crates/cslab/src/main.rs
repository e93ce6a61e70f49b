fn main() {
    std::process::exit(cslab::run(std::env::args_os()));
}
