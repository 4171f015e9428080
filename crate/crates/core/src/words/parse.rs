use super::{Letter, Sign, Word, WordError};

/// Exponents are expanded letter by letter, so their size is capped.
pub const MAX_EXPONENT: u64 = 1 << 20;

/// Parses `e`, the empty string, or whitespace-separated tokens
/// `x<digits>` with an optional `^<nonzero signed integer>`.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "e" {
        return Ok(Word::identity());
    }
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let position = token.as_ptr() as usize - text.as_ptr() as usize;
        let (letter, count) = parse_token(token, position)?;
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok(Word::new(letters))
}

fn parse_token(token: &str, position: usize) -> Result<(Letter, usize), WordError> {
    let malformed = || WordError::MalformedToken { token: token.to_string(), position };
    let body = token.strip_prefix('x').ok_or_else(malformed)?;
    let (index_text, exponent_text) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if index_text.starts_with('-') && is_digits(&index_text[1..]) {
        return Err(WordError::NegativeIndex { token: token.to_string(), position });
    }
    if !is_digits(index_text) {
        return Err(malformed());
    }
    let index: u32 = index_text.parse().map_err(|_| malformed())?;

    let Some(exponent_text) = exponent_text else {
        return Ok((Letter::pos(index), 1));
    };
    let (sign, magnitude) = match exponent_text.as_bytes().first() {
        Some(b'-') => (Sign::Minus, &exponent_text[1..]),
        Some(b'+') => (Sign::Plus, &exponent_text[1..]),
        _ => (Sign::Plus, exponent_text),
    };
    if !is_digits(magnitude) {
        return Err(malformed());
    }
    let out_of_range = || WordError::ExponentOutOfRange { token: token.to_string(), position };
    let count: u64 = magnitude.parse().map_err(|_| out_of_range())?;
    if count == 0 {
        return Err(WordError::ZeroExponent { token: token.to_string(), position });
    }
    if count > MAX_EXPONENT {
        return Err(out_of_range());
    }
    Ok((Letter::new(index, sign), count as usize))
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}
