fn main() {
    std::process::exit(tunedfs::cli::main());
}
