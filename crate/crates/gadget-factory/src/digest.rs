use sha2::{Digest, Sha256};

/// Stable hex digest used to key instances in reports and sidecars
/// (truncated SHA-256).
pub fn digest_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    hex::encode(&digest[..8])
}
