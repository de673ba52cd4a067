#include "tangnet/notation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>

namespace tangnet {

namespace {

constexpr double kNormGate = 1e-6;

enum class TokenKind {
    Ident,
    Integer,
    Float,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Semicolon,
    Equals,
    Pipe,
    Greater,
    Plus,
    Minus,
    Header,
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            const SourcePos pos{line_, column_};
            if (at_end()) {
                out.push_back(Token{TokenKind::End, "", pos});
                return out;
            }
            const char c = peek();
            if (is_ident_start(c)) {
                out.push_back(lex_ident(pos));
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back(lex_number(pos));
            } else {
                out.push_back(lex_symbol(pos));
            }
        }
    }

private:
    bool at_end() const { return offset_ >= src_.size(); }
    char peek() const { return src_[offset_]; }

    char advance() {
        const char c = src_[offset_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (!at_end()) {
            const char c = peek();
            if (c == '#') { // comment to end of line
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Token lex_ident(SourcePos pos) {
        std::string text;
        while (!at_end() && is_ident_char(peek())) {
            text.push_back(advance());
        }
        // the version header "tangnet-spec" is the one hyphenated word
        if (text == "tangnet" && !at_end() && peek() == '-' &&
            src_.compare(offset_, 5, "-spec") == 0) {
            for (int k = 0; k < 5; ++k) advance();
            return Token{TokenKind::Header, "tangnet-spec", pos};
        }
        return Token{TokenKind::Ident, std::move(text), pos};
    }

    Token lex_number(SourcePos pos) {
        std::string text;
        bool is_float = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            text.push_back(advance());
        }
        if (!at_end() && peek() == '.') {
            is_float = true;
            text.push_back(advance());
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                text.push_back(advance());
            }
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            const std::size_t mark = offset_;
            std::string exp;
            exp.push_back(advance());
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                exp.push_back(advance());
            }
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    exp.push_back(advance());
                }
                text += exp;
                is_float = true;
            } else {
                // not an exponent after all ('e' starts an identifier); rewind
                offset_ = mark;
                column_ -= exp.size();
            }
        }
        if (text.empty() || text == ".") {
            throw ParseError("malformed number", pos.line, pos.column, {"number"});
        }
        return Token{is_float ? TokenKind::Float : TokenKind::Integer,
                     std::move(text), pos};
    }

    Token lex_symbol(SourcePos pos) {
        const char c = advance();
        switch (c) {
            case '{': return Token{TokenKind::LBrace, "{", pos};
            case '}': return Token{TokenKind::RBrace, "}", pos};
            case '(': return Token{TokenKind::LParen, "(", pos};
            case ')': return Token{TokenKind::RParen, ")", pos};
            case ',': return Token{TokenKind::Comma, ",", pos};
            case ':': return Token{TokenKind::Colon, ":", pos};
            case ';': return Token{TokenKind::Semicolon, ";", pos};
            case '=': return Token{TokenKind::Equals, "=", pos};
            case '|': return Token{TokenKind::Pipe, "|", pos};
            case '>': return Token{TokenKind::Greater, ">", pos};
            case '+': return Token{TokenKind::Plus, "+", pos};
            case '-': return Token{TokenKind::Minus, "-", pos};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 pos.line, pos.column,
                                 {"identifier", "number", "punctuation"});
        }
    }

    const std::string& src_;
    std::size_t offset_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const ParseOptions& options)
        : tokens_(std::move(tokens)), options_(options) {}

    SpecDocument run() {
        SpecDocument doc;
        if (peek().kind == TokenKind::Header) {
            advance();
            const Token version = expect(TokenKind::Ident, {"'v1'"});
            if (version.text != "v1") {
                fail(version, "unsupported version '" + version.text + "'", {"'v1'"});
            }
            doc.had_header = true;
        }
        parse_system(doc);
        for (;;) {
            const Token& t = peek();
            if (t.kind == TokenKind::Ident && t.text == "state") {
                parse_state(doc);
            } else if (t.kind == TokenKind::Ident && t.text == "roles") {
                parse_roles(doc);
                break;
            } else if (t.kind == TokenKind::End) {
                break;
            } else {
                fail(t, "unexpected " + describe(t),
                     {"'state'", "'roles'", "end of input"});
            }
        }
        expect(TokenKind::End, {"end of input"});
        return doc;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }

    Token advance() { return tokens_[cursor_++]; }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::End) return "end of input";
        return "'" + t.text + "'";
    }

    [[noreturn]] void fail(const Token& at, const std::string& message,
                           std::vector<std::string> expected) const {
        throw ParseError(message, at.pos.line, at.pos.column, std::move(expected));
    }

    Token expect(TokenKind kind, std::vector<std::string> expected) {
        if (peek().kind != kind) {
            fail(peek(), "unexpected " + describe(peek()), std::move(expected));
        }
        return advance();
    }

    Token expect_keyword(const std::string& word) {
        if (peek().kind != TokenKind::Ident || peek().text != word) {
            fail(peek(), "unexpected " + describe(peek()), {"'" + word + "'"});
        }
        return advance();
    }

    std::size_t parse_size(const char* what) {
        const Token t = expect(TokenKind::Integer, {"integer"});
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, std::string("invalid ") + what, {"integer"});
        }
        return value;
    }

    double parse_unsigned_real(std::vector<std::string> expected) {
        if (peek().kind != TokenKind::Float && peek().kind != TokenKind::Integer) {
            fail(peek(), "unexpected " + describe(peek()), std::move(expected));
        }
        const Token t = advance();
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, "malformed number '" + t.text + "'", {"number"});
        }
        return value;
    }

    double parse_signed_real(std::vector<std::string> expected) {
        double sign = 1.0;
        if (peek().kind == TokenKind::Plus) {
            advance();
        } else if (peek().kind == TokenKind::Minus) {
            advance();
            sign = -1.0;
        }
        return sign * parse_unsigned_real(std::move(expected));
    }

    void parse_system(SpecDocument& doc) {
        expect_keyword("system");
        doc.system_name = expect(TokenKind::Ident, {"identifier"}).text;
        expect(TokenKind::LBrace, {"'{'"});
        std::size_t total = 1;
        for (;;) {
            const Token label = expect(TokenKind::Ident, {"identifier"});
            for (const Party& p : doc.parties) {
                if (p.label == label.text) {
                    fail(label, "duplicate party '" + label.text + "'",
                         {"a fresh party label"});
                }
            }
            expect(TokenKind::Colon, {"':'"});
            const Token dim_tok = peek();
            const std::size_t dim = parse_size("party dimension");
            if (dim < 2) {
                fail(dim_tok,
                     "party '" + label.text + "' needs dimension >= 2",
                     {"integer >= 2"});
            }
            if (total > dimension_cap() / dim) {
                fail(dim_tok,
                     "total dimension exceeds cap " +
                         std::to_string(dimension_cap()),
                     {"smaller dimension"});
            }
            total *= dim;
            doc.parties.push_back(Party{label.text, dim});
            if (peek().kind == TokenKind::Comma) {
                advance();
                continue;
            }
            expect(TokenKind::RBrace, {"','", "'}'"});
            break;
        }
    }

    StateTerm parse_term(const SpecDocument& doc) {
        StateTerm term;
        term.pos = peek().pos;

        if (peek().kind == TokenKind::LParen) {
            advance();
            const double re = parse_signed_real({"number"});
            double im_sign = 1.0;
            if (peek().kind == TokenKind::Minus) {
                im_sign = -1.0;
                advance();
            } else {
                expect(TokenKind::Plus, {"'+'", "'-'"});
            }
            const double im_mag = parse_unsigned_real({"number"});
            const Token unit = expect(TokenKind::Ident, {"'i'"});
            if (unit.text != "i") {
                fail(unit, "expected imaginary unit", {"'i'"});
            }
            expect(TokenKind::RParen, {"')'"});
            term.amplitude = Complex(re, im_sign * im_mag);
        } else {
            term.amplitude = Complex(parse_signed_real({"number", "'('"}), 0.0);
        }

        expect(TokenKind::Pipe, {"'|'"});
        for (std::size_t p = 0; p < doc.parties.size(); ++p) {
            if (p > 0) expect(TokenKind::Comma, {"','"});
            const Token idx_tok = peek();
            const std::size_t idx = parse_size("basis index");
            if (idx >= doc.parties[p].dim) {
                fail(idx_tok,
                     "index " + std::to_string(idx) + " out of range for party " +
                         doc.parties[p].label + " (dim " +
                         std::to_string(doc.parties[p].dim) + ")",
                     {"index in [0, " + std::to_string(doc.parties[p].dim) + ")"});
            }
            term.indices.push_back(idx);
        }
        expect(TokenKind::Greater, {"'>'"});
        return term;
    }

    void parse_state(SpecDocument& doc) {
        StateDecl decl;
        decl.pos = peek().pos;
        expect_keyword("state");
        const Token name = expect(TokenKind::Ident, {"identifier"});
        for (const StateDecl& existing : doc.states) {
            if (existing.name == name.text) {
                fail(name, "duplicate state '" + name.text + "'",
                     {"a fresh state name"});
            }
        }
        decl.name = name.text;
        expect(TokenKind::Equals, {"'='"});
        decl.terms.push_back(parse_term(doc));
        while (peek().kind == TokenKind::Plus) {
            advance();
            decl.terms.push_back(parse_term(doc));
        }
        expect(TokenKind::Semicolon, {"'+'", "';'"});

        if (!options_.allow_off_norm) {
            std::vector<Complex> amps(space_dim(doc), Complex(0.0, 0.0));
            for (const StateTerm& t : decl.terms) {
                amps[composite_index(doc, t.indices)] += t.amplitude;
            }
            double norm_sq = 0.0;
            for (const Complex& a : amps) norm_sq += std::norm(a);
            if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormGate) {
                fail(Token{TokenKind::Ident, decl.name, decl.pos},
                     "state '" + decl.name + "' has norm " +
                         std::to_string(std::sqrt(norm_sq)) +
                         " (pass the normalize option to accept)",
                     {"amplitudes with unit norm"});
            }
        }
        doc.states.push_back(std::move(decl));
    }

    void parse_roles(SpecDocument& doc) {
        expect_keyword("roles");
        expect(TokenKind::LBrace, {"'{'"});
        std::map<std::string, Role> roles;
        for (;;) {
            const Token label = expect(TokenKind::Ident, {"identifier"});
            bool known = false;
            for (const Party& p : doc.parties) {
                known = known || p.label == label.text;
            }
            if (!known) {
                fail(label, "unknown party '" + label.text + "'",
                     {"a declared party label"});
            }
            if (roles.count(label.text)) {
                fail(label, "duplicate role assignment for party '" + label.text + "'",
                     {"a party without a role"});
            }
            expect(TokenKind::Colon, {"':'"});
            const Token role_tok = expect(TokenKind::Ident, {"role name"});
            const std::optional<Role> role = role_from_name(role_tok.text);
            if (!role) {
                fail(role_tok, "unknown role '" + role_tok.text + "'",
                     {"'S'", "'S1'", "'S2'", "'E0'", "'E1'", "'E2'"});
            }
            expect(TokenKind::Semicolon, {"';'"});
            roles.emplace(label.text, *role);
            if (peek().kind == TokenKind::RBrace) {
                advance();
                break;
            }
        }
        doc.roles = std::move(roles);
    }

    static std::size_t space_dim(const SpecDocument& doc) {
        std::size_t total = 1;
        for (const Party& p : doc.parties) total *= p.dim;
        return total;
    }

    static std::size_t composite_index(const SpecDocument& doc,
                                       const std::vector<std::size_t>& indices) {
        std::size_t idx = 0;
        for (std::size_t p = 0; p < doc.parties.size(); ++p) {
            idx = idx * doc.parties[p].dim + indices[p];
        }
        return idx;
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    ParseOptions options_;
};

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string format_amplitude(Complex amp) {
    if (std::bit_cast<std::uint64_t>(amp.imag()) ==
        std::bit_cast<std::uint64_t>(0.0)) {
        return format_double(amp.real());
    }
    const char sign = std::signbit(amp.imag()) ? '-' : '+';
    return "(" + format_double(amp.real()) + sign +
           format_double(std::abs(amp.imag())) + "i)";
}

} // namespace

SpecDocument parse(const std::string& source, const ParseOptions& options) {
    Lexer lexer(source);
    return Parser(lexer.run(), options).run();
}

std::string format_document(const SpecDocument& doc) {
    std::string out = "tangnet-spec v1\n";
    out += "system " + doc.system_name + " {";
    for (std::size_t p = 0; p < doc.parties.size(); ++p) {
        out += (p == 0 ? " " : ", ");
        out += doc.parties[p].label + ":" + std::to_string(doc.parties[p].dim);
    }
    out += " }\n";
    for (const StateDecl& decl : doc.states) {
        out += "state " + decl.name + " =";
        for (std::size_t t = 0; t < decl.terms.size(); ++t) {
            const StateTerm& term = decl.terms[t];
            out += (t == 0 ? " " : " + ");
            out += format_amplitude(term.amplitude) + " |";
            for (std::size_t p = 0; p < term.indices.size(); ++p) {
                if (p > 0) out += ",";
                out += std::to_string(term.indices[p]);
            }
            out += ">";
        }
        out += ";\n";
    }
    if (doc.roles) {
        out += "roles {";
        for (const auto& [label, role] : *doc.roles) {
            out += " " + label + ": " + role_name(role) + ";";
        }
        out += " }\n";
    }
    return out;
}

bool structurally_equal(const SpecDocument& a, const SpecDocument& b) {
    const auto bits = [](double x) { return std::bit_cast<std::uint64_t>(x); };
    if (a.system_name != b.system_name) return false;
    if (a.parties.size() != b.parties.size()) return false;
    for (std::size_t p = 0; p < a.parties.size(); ++p) {
        if (a.parties[p].label != b.parties[p].label ||
            a.parties[p].dim != b.parties[p].dim) {
            return false;
        }
    }
    if (a.states.size() != b.states.size()) return false;
    for (std::size_t s = 0; s < a.states.size(); ++s) {
        const StateDecl& sa = a.states[s];
        const StateDecl& sb = b.states[s];
        if (sa.name != sb.name || sa.terms.size() != sb.terms.size()) return false;
        for (std::size_t t = 0; t < sa.terms.size(); ++t) {
            if (sa.terms[t].indices != sb.terms[t].indices) return false;
            if (bits(sa.terms[t].amplitude.real()) !=
                    bits(sb.terms[t].amplitude.real()) ||
                bits(sa.terms[t].amplitude.imag()) !=
                    bits(sb.terms[t].amplitude.imag())) {
                return false;
            }
        }
    }
    return a.roles == b.roles;
}

PureState to_pure_state(const SpecDocument& doc, const std::string& name) {
    const StateDecl* decl = nullptr;
    if (name.empty()) {
        if (doc.states.empty()) {
            throw ArgumentError("document declares no states");
        }
        decl = &doc.states.front();
    } else {
        for (const StateDecl& d : doc.states) {
            if (d.name == name) {
                decl = &d;
                break;
            }
        }
        if (!decl) {
            throw ArgumentError("no state named '" + name + "' in the document");
        }
    }

    const MultipartiteSpace space(doc.parties);
    std::vector<Complex> amps(space.total_dim(), Complex(0.0, 0.0));
    for (const StateTerm& term : decl->terms) {
        std::size_t idx = 0;
        for (std::size_t p = 0; p < doc.parties.size(); ++p) {
            idx = idx * doc.parties[p].dim + term.indices[p];
        }
        amps[idx] += term.amplitude;
    }
    double norm_sq = 0.0;
    for (const Complex& a : amps) norm_sq += std::norm(a);
    if (norm_sq < 1e-24) {
        throw ArgumentError("state '" + decl->name + "' has vanishing norm");
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amps) a *= inv;
    return PureState(space, std::move(amps));
}

PartitionModel partition_from_document(const SpecDocument& doc) {
    if (!doc.roles) {
        throw ArgumentError("document has no roles block");
    }
    return infer_partition_model(*doc.roles);
}

} // namespace tangnet
