fn main() {
    std::process::exit(qseq::cli::run());
}
