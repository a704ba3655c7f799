fn main() {
    std::process::exit(qcorr::cli::run());
}
