//! File envelope for keys, delegations and signatures.
//!
//! ```text
//! "BSG1" | version | hash id | scheme id | l (u16) | r (u16) | count (u32) | { len (u32) | item }*
//! ```
//!
//! Braid items are canonical [`NormalForm`] encodings, all other items are byte strings.
//! All integers are big-endian. The same bytes can travel as text: one header line
//! naming the scheme, then standard base-64 wrapped at 76 columns.

use base64::engine::general_purpose::STANDARD;
use base64::Engine;

use crate::braid::{DecodeError, GroupParams, NormalForm};
use crate::hashing::HASH_ID_SHA256;
use crate::schemes::{
    BiDvpsSignature, BiDvsSignature, Delegation, DvpsSignature, DvsSignature, KeyPair, ProxyKey, ProxySignature,
    PublicKey, Recipient, Warrant,
};

pub const MAGIC: [u8; 4] = *b"BSG1";
pub const VERSION: u8 = 0x01;
/// First line of the text form.
pub const ARMOR_PREFIX: &str = "# braidsig scheme=";

const HEADER_LEN: usize = 12;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("bad magic bytes (expected \"BSG1\")")]
    BadMagic,
    #[error("unsupported envelope version {0}")]
    BadVersion(u8),
    #[error("unsupported hash algorithm id {0}")]
    BadHashId(u8),
    #[error("unknown scheme id {0}")]
    BadSchemeId(u8),
    #[error("input truncated")]
    Truncated,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("expected {expected:?}, found {found:?}")]
    WrongKind { expected: Kind, found: Kind },
    #[error("malformed payload: {0}")]
    Malformed(String),
}

impl From<DecodeError> for CodecError {
    fn from(e: DecodeError) -> Self {
        match e {
            DecodeError::Truncated => CodecError::Truncated,
            DecodeError::IndexOutOfRange(s) => CodecError::IndexOutOfRange(s),
            other => CodecError::Malformed(other.to_string()),
        }
    }
}

/// The scheme id byte. `0`–`5` name the key file and the five signature types; the
/// intermediate protocol messages get their own ids after those.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    KeyPair = 0,
    Proxy = 1,
    Dvs = 2,
    BiDvs = 3,
    Dvps = 4,
    BiDvps = 5,
    Delegation = 6,
    ProxyKey = 7,
    PublicKey = 8,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::KeyPair,
        Kind::Proxy,
        Kind::Dvs,
        Kind::BiDvs,
        Kind::Dvps,
        Kind::BiDvps,
        Kind::Delegation,
        Kind::ProxyKey,
        Kind::PublicKey,
    ];

    pub fn from_byte(b: u8) -> Option<Kind> {
        Kind::ALL.get(b as usize).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::KeyPair => "keys",
            Kind::Proxy => "proxy",
            Kind::Dvs => "dvs",
            Kind::BiDvs => "bidvs",
            Kind::Dvps => "dvps",
            Kind::BiDvps => "bidvps",
            Kind::Delegation => "delegation",
            Kind::ProxyKey => "proxy-key",
            Kind::PublicKey => "public-key",
        }
    }
}

/// Builds the item list of a value.
#[derive(Default)]
pub struct Writer {
    items: Vec<Vec<u8>>,
}

impl Writer {
    pub fn braid(&mut self, x: &NormalForm) -> &mut Self {
        self.items.push(x.encode());
        self
    }

    pub fn bytes(&mut self, b: &[u8]) -> &mut Self {
        self.items.push(b.to_vec());
        self
    }

    pub fn warrant(&mut self, w: &Warrant) -> &mut Self {
        self.bytes(&w.to_bytes())
    }

    pub fn recipient(&mut self, r: Recipient) -> &mut Self {
        self.bytes(&[r.to_byte()])
    }
}

/// Reads items back in order, checking braid indices against the envelope.
pub struct Reader<'a> {
    params: GroupParams,
    items: std::vec::IntoIter<&'a [u8]>,
}

impl<'a> Reader<'a> {
    fn next(&mut self) -> Result<&'a [u8], CodecError> {
        self.items.next().ok_or_else(|| CodecError::Malformed("too few items".into()))
    }

    pub fn braid(&mut self) -> Result<NormalForm, CodecError> {
        self.braid_on(self.params.n())
    }

    /// A braid on `n` strands instead of the envelope's `l + r`.
    pub fn braid_on(&mut self, n: usize) -> Result<NormalForm, CodecError> {
        let x = NormalForm::decode(self.next()?)?;
        if x.n() != n {
            return Err(CodecError::IndexOutOfRange(format!("braid on {} strands, expected {n}", x.n())));
        }
        Ok(x)
    }

    pub fn bytes(&mut self) -> Result<Vec<u8>, CodecError> {
        Ok(self.next()?.to_vec())
    }

    pub fn warrant(&mut self) -> Result<Warrant, CodecError> {
        Warrant::from_bytes(self.next()?).map_err(|e| CodecError::Malformed(e.to_string()))
    }

    pub fn recipient(&mut self) -> Result<Recipient, CodecError> {
        match self.next()? {
            [b] => Recipient::from_byte(*b).ok_or_else(|| CodecError::Malformed(format!("recipient byte {b}"))),
            _ => Err(CodecError::Malformed("recipient must be one byte".into())),
        }
    }

    fn finish(mut self) -> Result<(), CodecError> {
        match self.items.next() {
            None => Ok(()),
            Some(_) => Err(CodecError::Malformed("trailing items".into())),
        }
    }
}

/// A value with an envelope layout. Fields are written in declaration order.
pub trait Encodable: Sized {
    const KIND: Kind;
    fn write(&self, w: &mut Writer);
    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError>;
}

pub fn encode<T: Encodable>(value: &T, params: GroupParams) -> Vec<u8> {
    let mut w = Writer::default();
    value.write(&mut w);
    let mut out = Vec::with_capacity(HEADER_LEN + 4 + w.items.iter().map(|i| i.len() + 4).sum::<usize>());
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&[VERSION, HASH_ID_SHA256, T::KIND as u8]);
    out.extend_from_slice(&(params.l() as u16).to_be_bytes());
    out.extend_from_slice(&(params.r() as u16).to_be_bytes());
    out.extend_from_slice(&(w.items.len() as u32).to_be_bytes());
    for item in &w.items {
        out.extend_from_slice(&(item.len() as u32).to_be_bytes());
        out.extend_from_slice(item);
    }
    out
}

/// Header fields of an envelope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub kind: Kind,
    pub params: GroupParams,
}

fn split(bytes: &[u8]) -> Result<(Header, Vec<&[u8]>), CodecError> {
    if bytes.len() < 4 {
        return Err(CodecError::Truncated);
    }
    if bytes[..4] != MAGIC {
        return Err(CodecError::BadMagic);
    }
    if bytes.len() < HEADER_LEN + 4 {
        return Err(CodecError::Truncated);
    }
    if bytes[4] != VERSION {
        return Err(CodecError::BadVersion(bytes[4]));
    }
    if bytes[5] != HASH_ID_SHA256 {
        return Err(CodecError::BadHashId(bytes[5]));
    }
    let kind = Kind::from_byte(bytes[6]).ok_or(CodecError::BadSchemeId(bytes[6]))?;
    let l = u16::from_be_bytes([bytes[7], bytes[8]]) as usize;
    let r = u16::from_be_bytes([bytes[9], bytes[10]]) as usize;
    let params = GroupParams::new(l, r).map_err(|e| CodecError::IndexOutOfRange(e.to_string()))?;
    let count = u32::from_be_bytes(bytes[11..15].try_into().unwrap()) as usize;
    let mut rest = &bytes[15..];
    let mut items = Vec::new();
    for _ in 0..count {
        if rest.len() < 4 {
            return Err(CodecError::Truncated);
        }
        let len = u32::from_be_bytes(rest[..4].try_into().unwrap()) as usize;
        rest = &rest[4..];
        if rest.len() < len {
            return Err(CodecError::Truncated);
        }
        items.push(&rest[..len]);
        rest = &rest[len..];
    }
    if !rest.is_empty() {
        return Err(CodecError::Malformed("trailing bytes after payload".into()));
    }
    Ok((Header { kind, params }, items))
}

/// Reads only the header.
pub fn peek(bytes: &[u8]) -> Result<Header, CodecError> {
    split(bytes).map(|(h, _)| h)
}

pub fn decode<T: Encodable>(bytes: &[u8]) -> Result<(T, GroupParams), CodecError> {
    let (header, items) = split(bytes)?;
    if header.kind != T::KIND {
        return Err(CodecError::WrongKind { expected: T::KIND, found: header.kind });
    }
    let mut r = Reader { params: header.params, items: items.into_iter() };
    let value = T::read(&mut r)?;
    r.finish()?;
    Ok((value, header.params))
}

/// Wraps envelope bytes as text.
pub fn armor(bytes: &[u8]) -> Result<String, CodecError> {
    let kind = peek(bytes)?.kind;
    let body = STANDARD.encode(bytes);
    let mut out = format!("{ARMOR_PREFIX}{} {}\n", kind as u8, kind.name());
    for chunk in body.as_bytes().chunks(76) {
        out.push_str(std::str::from_utf8(chunk).expect("base-64 is ASCII"));
        out.push('\n');
    }
    Ok(out)
}

/// Accepts either raw envelope bytes or the text form, and returns raw bytes.
pub fn dearmor(input: &[u8]) -> Result<Vec<u8>, CodecError> {
    if !input.starts_with(ARMOR_PREFIX.as_bytes()) {
        return Ok(input.to_vec());
    }
    let text = std::str::from_utf8(input).map_err(|_| CodecError::Malformed("armor is not UTF-8".into()))?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    let body: String = lines.flat_map(|l| l.chars().filter(|c| !c.is_whitespace())).collect();
    let bytes = STANDARD.decode(body).map_err(|e| CodecError::Malformed(format!("base-64: {e}")))?;
    let declared = header[ARMOR_PREFIX.len()..].split_whitespace().next().and_then(|s| s.parse::<u8>().ok());
    let actual = peek(&bytes)?.kind as u8;
    if declared != Some(actual) {
        return Err(CodecError::Malformed("armor header disagrees with envelope".into()));
    }
    Ok(bytes)
}

impl Encodable for PublicKey {
    const KIND: Kind = Kind::PublicKey;

    fn write(&self, w: &mut Writer) {
        w.braid(&self.x).braid(&self.x_prime);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(PublicKey { params: r.params, x: r.braid()?, x_prime: r.braid()? })
    }
}

/// `x_u, x'_u, a_u` with `a_u` stored on `r` strands.
impl Encodable for KeyPair {
    const KIND: Kind = Kind::KeyPair;

    fn write(&self, w: &mut Writer) {
        w.braid(&self.public().x).braid(&self.public().x_prime).braid(&self.restricted_secret());
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        let (x, x_prime) = (r.braid()?, r.braid()?);
        let secret = r.braid_on(r.params.r())?;
        let kp = KeyPair::from_restricted(r.params, &secret, x).map_err(|e| CodecError::Malformed(e.to_string()))?;
        if kp.public().x_prime != x_prime {
            return Err(CodecError::Malformed("x' does not match the secret key".into()));
        }
        Ok(kp)
    }
}

impl Encodable for Delegation {
    const KIND: Kind = Kind::Delegation;

    fn write(&self, w: &mut Writer) {
        w.warrant(&self.warrant).braid(&self.z_o).braid(&self.t_o);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(Delegation { warrant: r.warrant()?, z_o: r.braid()?, t_o: r.braid()? })
    }
}

impl Encodable for ProxyKey {
    const KIND: Kind = Kind::ProxyKey;

    fn write(&self, w: &mut Writer) {
        w.braid(&self.pk);
        self.delegation.write(w);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(ProxyKey { pk: r.braid()?, delegation: Delegation::read(r)? })
    }
}

impl Encodable for ProxySignature {
    const KIND: Kind = Kind::Proxy;

    fn write(&self, w: &mut Writer) {
        w.braid(&self.gamma).braid(&self.delta).braid(&self.theta).braid(&self.t_o).warrant(&self.warrant);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(ProxySignature {
            gamma: r.braid()?,
            delta: r.braid()?,
            theta: r.braid()?,
            t_o: r.braid()?,
            warrant: r.warrant()?,
        })
    }
}

impl Encodable for DvsSignature {
    const KIND: Kind = Kind::Dvs;

    fn write(&self, w: &mut Writer) {
        w.bytes(&self.message).braid(&self.alpha).braid(&self.delta);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(DvsSignature { message: r.bytes()?, alpha: r.braid()?, delta: r.braid()? })
    }
}

impl Encodable for BiDvsSignature {
    const KIND: Kind = Kind::BiDvs;

    fn write(&self, w: &mut Writer) {
        w.recipient(self.recipient)
            .bytes(&self.message)
            .braid(&self.alpha_own)
            .braid(&self.beta_other)
            .braid(&self.delta);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(BiDvsSignature {
            recipient: r.recipient()?,
            message: r.bytes()?,
            alpha_own: r.braid()?,
            beta_other: r.braid()?,
            delta: r.braid()?,
        })
    }
}

impl Encodable for DvpsSignature {
    const KIND: Kind = Kind::Dvps;

    fn write(&self, w: &mut Writer) {
        w.warrant(&self.warrant)
            .braid(&self.alpha)
            .braid(&self.gamma)
            .braid(&self.delta)
            .braid(&self.theta)
            .braid(&self.t_o);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(DvpsSignature {
            warrant: r.warrant()?,
            alpha: r.braid()?,
            gamma: r.braid()?,
            delta: r.braid()?,
            theta: r.braid()?,
            t_o: r.braid()?,
        })
    }
}

impl Encodable for BiDvpsSignature {
    const KIND: Kind = Kind::BiDvps;

    fn write(&self, w: &mut Writer) {
        w.recipient(self.recipient)
            .bytes(&self.message)
            .braid(&self.alpha_own)
            .braid(&self.beta_other)
            .braid(&self.gamma)
            .braid(&self.delta)
            .braid(&self.theta)
            .braid(&self.t_o)
            .warrant(&self.warrant);
    }

    fn read(r: &mut Reader<'_>) -> Result<Self, CodecError> {
        Ok(BiDvpsSignature {
            recipient: r.recipient()?,
            message: r.bytes()?,
            alpha_own: r.braid()?,
            beta_other: r.braid()?,
            gamma: r.braid()?,
            delta: r.braid()?,
            theta: r.braid()?,
            t_o: r.braid()?,
            warrant: r.warrant()?,
        })
    }
}
