#include "poim/parser.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

namespace poim {

namespace {

enum class TokenType {
    Iri,
    PName,
    BlankLabel,
    Variable,
    String,
    AtWord,
    Word,
    DoubleCaret,
    Dot,
    Semicolon,
    Comma,
    LBrace,
    RBrace,
    End,
};

struct Token {
    TokenType type = TokenType::End;
    std::string text;  // iri body, word, blank label, variable name, string value, prefix part
    std::string local; // local part of a prefixed name
    int line = 1;
    int column = 1;
};

bool isWordStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool isWordChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool isLocalChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool isLabelChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skipTrivia();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (eof()) {
            tok.type = TokenType::End;
            return tok;
        }
        char c = peek();
        switch (c) {
            case '.': advance(); tok.type = TokenType::Dot; return tok;
            case ';': advance(); tok.type = TokenType::Semicolon; return tok;
            case ',': advance(); tok.type = TokenType::Comma; return tok;
            case '{': advance(); tok.type = TokenType::LBrace; return tok;
            case '}': advance(); tok.type = TokenType::RBrace; return tok;
            case '<': return iriRef(tok);
            case '"': return stringLiteral(tok);
            case '?': return variable(tok);
            case '@': return atWord(tok);
            case '^':
                advance();
                if (eof() || peek() != '^') throw SyntaxError(tok.line, tok.column, "expected '^^'");
                advance();
                tok.type = TokenType::DoubleCaret;
                return tok;
            default: break;
        }
        if (c == '_' && pos_ + 1 < src_.size() && src_[pos_ + 1] == ':') return blankLabel(tok);
        if (isWordStart(c)) return wordOrPName(tok);
        if (c == ':') return wordOrPName(tok); // empty prefix
        throw SyntaxError(tok.line, tok.column,
                          std::string("unexpected character '") + c + "'");
    }

private:
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skipTrivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token iriRef(Token tok) {
        advance(); // '<'
        std::string body;
        for (;;) {
            if (eof()) throw SyntaxError(tok.line, tok.column, "unterminated IRI");
            char c = advance();
            if (c == '>') break;
            if (c == '<' || c == ' ' || c == '\n' || c == '\t')
                throw SyntaxError(tok.line, tok.column, "invalid character in IRI");
            body += c;
        }
        tok.type = TokenType::Iri;
        tok.text = std::move(body);
        return tok;
    }

    Token stringLiteral(Token tok) {
        advance(); // '"'
        std::string value;
        for (;;) {
            if (eof()) throw SyntaxError(tok.line, tok.column, "unterminated string literal");
            char c = advance();
            if (c == '"') break;
            if (c == '\n') throw SyntaxError(tok.line, tok.column, "unterminated string literal");
            if (c == '\\') {
                if (eof()) throw SyntaxError(tok.line, tok.column, "unterminated string literal");
                char e = advance();
                switch (e) {
                    case '"': value += '"'; break;
                    case '\\': value += '\\'; break;
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    default:
                        throw SyntaxError(tok.line, tok.column,
                                          std::string("invalid escape '\\") + e + "'");
                }
            } else {
                value += c;
            }
        }
        tok.type = TokenType::String;
        tok.text = std::move(value);
        return tok;
    }

    Token variable(Token tok) {
        advance(); // '?'
        std::string name;
        while (!eof() && isLabelChar(peek())) name += advance();
        if (name.empty()) throw SyntaxError(tok.line, tok.column, "expected a variable name after '?'");
        tok.type = TokenType::Variable;
        tok.text = std::move(name);
        return tok;
    }

    Token atWord(Token tok) {
        advance(); // '@'
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
            word += advance();
        if (word.empty()) throw SyntaxError(tok.line, tok.column, "expected a word after '@'");
        tok.type = TokenType::AtWord;
        tok.text = std::move(word);
        return tok;
    }

    Token blankLabel(Token tok) {
        advance(); // '_'
        advance(); // ':'
        std::string label;
        while (!eof() && isLabelChar(peek())) label += advance();
        if (label.empty()) throw SyntaxError(tok.line, tok.column, "expected a blank node label");
        tok.type = TokenType::BlankLabel;
        tok.text = std::move(label);
        return tok;
    }

    Token wordOrPName(Token tok) {
        std::string word;
        while (!eof() && isWordChar(peek())) word += advance();
        if (eof() || peek() != ':') {
            if (word.empty())
                throw SyntaxError(tok.line, tok.column, "unexpected character ':'");
            tok.type = TokenType::Word;
            tok.text = std::move(word);
            return tok;
        }
        advance(); // ':'
        std::string local;
        while (!eof() && (isLocalChar(peek()) ||
                          (peek() == '.' && pos_ + 1 < src_.size() && isLocalChar(src_[pos_ + 1])))) {
            local += advance();
        }
        tok.type = TokenType::PName;
        tok.text = std::move(word);
        tok.local = std::move(local);
        return tok;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

bool wordIs(const Token& tok, std::string_view keyword) {
    if (tok.type != TokenType::Word || tok.text.size() != keyword.size()) return false;
    for (std::size_t i = 0; i < keyword.size(); ++i) {
        if (std::toupper(static_cast<unsigned char>(tok.text[i])) != keyword[i]) return false;
    }
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { bump(); }

protected:
    void bump() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(tok_.line, tok_.column, message);
    }

    void expect(TokenType type, const std::string& what) {
        if (tok_.type != type) fail("expected " + what);
        bump();
    }

    std::string expandPName() const {
        auto it = prefixes_.find(tok_.text);
        if (it == prefixes_.end())
            throw UndefinedPrefixError(tok_.line, tok_.column, tok_.text);
        return it->second + tok_.local;
    }

    // Consumes the token(s) of one term.
    Term term(bool allowVariables) {
        switch (tok_.type) {
            case TokenType::Iri: {
                Term t = Term::iri(tok_.text);
                bump();
                return t;
            }
            case TokenType::PName: {
                Term t = Term::iri(expandPName());
                bump();
                return t;
            }
            case TokenType::BlankLabel: {
                Term t = Term::blank(tok_.text);
                bump();
                return t;
            }
            case TokenType::Variable: {
                if (!allowVariables)
                    throw VariableInDataError(tok_.line, tok_.column, tok_.text);
                Term t = Term::variable(tok_.text);
                bump();
                return t;
            }
            case TokenType::String: {
                std::string value = tok_.text;
                bump();
                if (tok_.type == TokenType::DoubleCaret) {
                    bump();
                    std::string datatype;
                    if (tok_.type == TokenType::Iri)
                        datatype = tok_.text;
                    else if (tok_.type == TokenType::PName)
                        datatype = expandPName();
                    else
                        fail("expected a datatype IRI after '^^'");
                    bump();
                    return Term::typedLiteral(std::move(value), std::move(datatype));
                }
                if (tok_.type == TokenType::AtWord) {
                    std::string tag = tok_.text;
                    bump();
                    return Term::langLiteral(std::move(value), std::move(tag));
                }
                return Term::literal(std::move(value));
            }
            default:
                fail("expected a term");
        }
    }

    // subject predicateObjectList, with ';' and ',' lists. The terminating
    // '.' is required at the top level of a data document and optional
    // before a closing '}' inside a query block.
    void triplesStatement(std::set<Triple>& out, std::map<Triple, SourcePosition>* spans,
                          bool allowVariables, bool requireDot) {
        SourcePosition at{tok_.line, tok_.column};
        Term subject = term(allowVariables);
        for (;;) {
            Term predicate = term(allowVariables);
            for (;;) {
                Term object = term(allowVariables);
                Triple triple{subject, predicate, object};
                if (spans) spans->emplace(triple, at);
                out.insert(std::move(triple));
                if (tok_.type != TokenType::Comma) break;
                bump();
            }
            if (tok_.type != TokenType::Semicolon) break;
            bump();
        }
        if (tok_.type == TokenType::Dot) {
            bump();
        } else if (requireDot) {
            fail("expected '.'");
        } else if (tok_.type != TokenType::RBrace) {
            fail("expected '.' or '}'");
        }
    }

    Graph braceBlock() {
        expect(TokenType::LBrace, "'{'");
        std::set<Triple> triples;
        while (tok_.type != TokenType::RBrace) {
            if (tok_.type == TokenType::End) fail("expected '}'");
            triplesStatement(triples, nullptr, true, false);
        }
        bump(); // '}'
        return Graph(std::move(triples));
    }

    Lexer lexer_;
    Token tok_;
    std::map<std::string, std::string> prefixes_;
};

class DataParser : public Parser {
public:
    explicit DataParser(std::string_view src) : Parser(src) {}

    ParsedDocument run() {
        ParsedDocument doc;
        std::set<Triple> triples;
        while (tok_.type != TokenType::End) {
            if (tok_.type == TokenType::AtWord) {
                if (tok_.text != "prefix") fail("expected '@prefix'");
                bump();
                prefixDirective(true);
            } else {
                triplesStatement(triples, &doc.sourceSpans, false, true);
            }
        }
        doc.prefixes = prefixes_;
        doc.graph = Graph(std::move(triples));
        return doc;
    }

protected:
    void prefixDirective(bool dotTerminated) {
        if (tok_.type != TokenType::PName || !tok_.local.empty())
            fail("expected a prefix declaration like 'ex:'");
        std::string prefix = tok_.text;
        bump();
        if (tok_.type != TokenType::Iri) fail("expected an IRI");
        prefixes_[prefix] = tok_.text;
        bump();
        if (dotTerminated) expect(TokenType::Dot, "'.'");
    }
};

class QueryParser : public DataParser {
public:
    QueryParser(std::string_view src, FreshNames& gen) : DataParser(src), gen_(gen) {}

    QueryDocument run() {
        while (wordIs(tok_, "PREFIX")) {
            bump();
            prefixDirective(false);
        }
        if (wordIs(tok_, "CONSTRUCT")) {
            bump();
            Graph rhs = braceBlock();
            if (!wordIs(tok_, "WHERE")) fail("expected WHERE");
            bump();
            Graph lhs = braceBlock();
            if (tok_.type != TokenType::End) fail("expected end of input");
            return QueryDocument{prefixes_, normalizeConstruct(lhs, rhs, gen_)};
        }
        if (wordIs(tok_, "SELECT")) {
            bump();
            std::vector<Term> columns;
            while (tok_.type == TokenType::Variable) {
                columns.push_back(Term::variable(tok_.text));
                bump();
            }
            if (columns.empty()) fail("expected select variables");
            if (!wordIs(tok_, "WHERE")) fail("expected WHERE");
            bump();
            Graph lhs = braceBlock();
            if (tok_.type != TokenType::End) fail("expected end of input");
            return QueryDocument{prefixes_, SelectQuery::checked(std::move(lhs), std::move(columns))};
        }
        fail("expected CONSTRUCT or SELECT");
    }

private:
    FreshNames& gen_;
};

} // namespace

ParsedDocument parseData(std::string_view text) {
    return DataParser(text).run();
}

QueryDocument parseQuery(std::string_view text, FreshNames& gen) {
    return QueryParser(text, gen).run();
}

} // namespace poim
