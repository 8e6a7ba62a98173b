use super::SchemeError;

/// Delegation warrant `m_w`: who delegates to whom, for how long, and for which message.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Warrant {
    pub original_id: Vec<u8>,
    pub proxy_id: Vec<u8>,
    /// Seconds since the Unix epoch, inclusive.
    pub valid_from: u64,
    pub valid_to: u64,
    /// The message the delegation covers.
    pub message_scope: Vec<u8>,
}

impl Warrant {
    pub fn new(
        original_id: impl Into<Vec<u8>>,
        proxy_id: impl Into<Vec<u8>>,
        valid_from: u64,
        valid_to: u64,
        message_scope: impl Into<Vec<u8>>,
    ) -> Result<Self, SchemeError> {
        if valid_from > valid_to {
            return Err(SchemeError::InvalidWarrant("valid_from after valid_to"));
        }
        Ok(Warrant {
            original_id: original_id.into(),
            proxy_id: proxy_id.into(),
            valid_from,
            valid_to,
            message_scope: message_scope.into(),
        })
    }

    /// Canonical bytes: `original_id`, `proxy_id` (u32 length + bytes each),
    /// `valid_from`, `valid_to` (u64), `message_scope` (u32 length + bytes). Big-endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(28 + self.original_id.len() + self.proxy_id.len() + self.message_scope.len());
        put_bytes(&mut out, &self.original_id);
        put_bytes(&mut out, &self.proxy_id);
        out.extend_from_slice(&self.valid_from.to_be_bytes());
        out.extend_from_slice(&self.valid_to.to_be_bytes());
        put_bytes(&mut out, &self.message_scope);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, SchemeError> {
        let mut rest = bytes;
        let original_id = take_bytes(&mut rest)?;
        let proxy_id = take_bytes(&mut rest)?;
        let valid_from = take_u64(&mut rest)?;
        let valid_to = take_u64(&mut rest)?;
        let message_scope = take_bytes(&mut rest)?;
        if !rest.is_empty() {
            return Err(SchemeError::InvalidWarrant("trailing bytes"));
        }
        Warrant::new(original_id, proxy_id, valid_from, valid_to, message_scope)
    }
}

fn put_bytes(out: &mut Vec<u8>, b: &[u8]) {
    out.extend_from_slice(&(b.len() as u32).to_be_bytes());
    out.extend_from_slice(b);
}

fn take_bytes(rest: &mut &[u8]) -> Result<Vec<u8>, SchemeError> {
    if rest.len() < 4 {
        return Err(SchemeError::InvalidWarrant("truncated"));
    }
    let len = u32::from_be_bytes(rest[..4].try_into().unwrap()) as usize;
    if rest.len() - 4 < len {
        return Err(SchemeError::InvalidWarrant("truncated"));
    }
    let v = rest[4..4 + len].to_vec();
    *rest = &rest[4 + len..];
    Ok(v)
}

fn take_u64(rest: &mut &[u8]) -> Result<u64, SchemeError> {
    if rest.len() < 8 {
        return Err(SchemeError::InvalidWarrant("truncated"));
    }
    let v = u64::from_be_bytes(rest[..8].try_into().unwrap());
    *rest = &rest[8..];
    Ok(v)
}
