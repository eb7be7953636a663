//! Braid words, Garside normal forms and crossing-change certificates.

pub mod budget;
pub mod cert;
pub mod garside;
pub mod prop21;
mod word;

pub use budget::theorem1_crossing_budget;
pub use cert::{
    apply_step, recognize_torus_closure, verify_certificate, CertStep, Certificate,
    VerificationReport,
};
pub use garside::{braid_equal, garside_normal_form, NormalForm};
pub use prop21::generate_prop21_certificate;
pub use word::{BraidWord, Letter};
