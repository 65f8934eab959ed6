//! Message tokenization and exaggeration collapsing.

/// One corpus message. `message_id` is its zero-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMessage {
    pub message_id: usize,
    pub text: String,
}

impl RawMessage {
    pub fn new(message_id: usize, text: impl Into<String>) -> Self {
        RawMessage {
            message_id,
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub message_id: usize,
    pub token_index: usize,
    /// The token as written, minus surrounding punctuation.
    pub surface: String,
    /// Lookup forms, most conservative first. Never empty.
    pub candidates: Vec<String>,
    pub exaggerated: bool,
}

impl Token {
    pub fn first_candidate(&self) -> &str {
        &self.candidates[0]
    }
}

/// Letters of the Latin-script dialect alphabet; digits 3/7/9 are consonants.
fn is_word_char(c: char) -> bool {
    c.to_lowercase()
        .all(|l| l.is_ascii_lowercase() || l.is_ascii_digit() || l == '\'')
}

/// Splits a message on whitespace and strips leading and trailing
/// punctuation. Fragments without any letter are dropped. Candidates hold
/// only the lowercased surface; run [`collapse_exaggeration`] afterwards.
pub fn tokenize_message(msg: &RawMessage) -> Vec<Token> {
    msg.text
        .split_whitespace()
        .map(|frag| frag.trim_matches(|c: char| !is_word_char(c)))
        .filter(|frag| frag.chars().any(char::is_alphabetic))
        .enumerate()
        .map(|(token_index, frag)| Token {
            message_id: msg.message_id,
            token_index,
            surface: frag.to_string(),
            candidates: vec![frag.to_lowercase()],
            exaggerated: false,
        })
        .collect()
}

/// Shortens every run of three or more identical characters to `keep`.
fn collapse_runs(s: &str, keep: usize) -> (String, bool) {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::with_capacity(s.len());
    let mut collapsed = false;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let run = chars[i..].iter().take_while(|&&x| x == c).count();
        let emit = if run >= 3 {
            collapsed = true;
            keep
        } else {
            run
        };
        out.extend(std::iter::repeat_n(c, emit));
        i += run;
    }
    (out, collapsed)
}

/// Collapses letter-repetition exaggeration (`bezzzzzaf`, `sahbiii`).
///
/// Runs of length two are legitimate gemination and stay. Longer runs give
/// two candidates: every run cut to two letters, then every run cut to one.
pub fn collapse_exaggeration(mut token: Token) -> Token {
    let lowered = token.surface.to_lowercase();
    let (double, collapsed) = collapse_runs(&lowered, 2);
    if !collapsed {
        token.candidates = vec![lowered];
        token.exaggerated = false;
        return token;
    }
    let (single, _) = collapse_runs(&lowered, 1);
    token.candidates = vec![double];
    if token.candidates[0] != single {
        token.candidates.push(single);
    }
    token.exaggerated = true;
    token
}

/// Tokenizes and normalizes a whole message.
pub fn normalize_message(msg: &RawMessage) -> Vec<Token> {
    tokenize_message(msg)
        .into_iter()
        .map(collapse_exaggeration)
        .collect()
}
