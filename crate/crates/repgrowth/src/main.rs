use std::process::ExitCode;

fn main() -> ExitCode {
    match repgrowth::cli::run_from_env() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            // clap already prints help/version text through its own error
            if let Some(clap_err) = e.downcast_ref::<clap::Error>() {
                let _ = clap_err.print();
                return if clap_err.use_stderr() {
                    ExitCode::FAILURE
                } else {
                    ExitCode::SUCCESS
                };
            }
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
