use std::process::exit;

fn main() {
    // Die silently on closed pipes (`binsum converge ... | head`) instead of
    // panicking through Rust's default SIGPIPE ignore.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    exit(binsum::cli::run());
}
