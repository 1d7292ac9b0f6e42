#include "quiverhh/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace quiverhh {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Label, Colon, Comma, Arrow, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, column;
};

bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '\n') {
            out.push_back({Tok::Newline, "\n", line, col});
            ++i, ++line, col = 1;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i, ++col;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i, ++col;
        } else if (c == ':') {
            out.push_back({Tok::Colon, ":", line, col});
            ++i, ++col;
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", line, col});
            ++i, ++col;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", line, col});
            i += 2, col += 2;
        } else if (label_char(c)) {
            std::size_t start = i, start_col = col;
            while (i < text.size() && label_char(text[i])) ++i, ++col;
            out.push_back({Tok::Label, text.substr(start, i - start), line, start_col});
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

constexpr std::array<const char*, 4> kKeywords{"vertices", "arrows", "relations", "char"};

bool is_keyword(const std::string& s) {
    return std::find_if(kKeywords.begin(), kKeywords.end(), [&](const char* k) { return s == k; }) != kKeywords.end();
}

struct ArrowEntry {
    Token label, source, target;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    QuiverFile run() {
        skip_separators();
        while (peek().kind != Tok::End) {
            const Token& head = peek();
            if (head.kind != Tok::Label || !is_keyword(head.text) || peek(1).kind != Tok::Colon)
                fail(head, "expected a section header (vertices:, arrows:, relations: or char:)");
            std::string section = head.text;
            if (!seen_.insert(section).second) fail(head, "section '" + section + "' appears twice");
            pos_ += 2;
            if (section == "vertices")
                parse_vertices();
            else if (section == "arrows")
                parse_arrows();
            else if (section == "relations")
                parse_relations();
            else
                parse_char();
            skip_separators();
        }
        return build();
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

    void skip_separators() {
        while (peek().kind == Tok::Newline || peek().kind == Tok::Comma) ++pos_;
    }
    bool at_section_end() const {
        const Token& t = peek();
        return t.kind == Tok::End || (t.kind == Tok::Label && is_keyword(t.text) && peek(1).kind == Tok::Colon);
    }
    Token expect_label(const char* what) {
        const Token& t = next();
        if (t.kind != Tok::Label) fail(t, std::string("expected ") + what);
        if (is_keyword(t.text)) fail(t, "'" + t.text + "' is a reserved word and cannot be a label");
        return t;
    }
    void expect(Tok kind, const char* what) {
        const Token& t = next();
        if (t.kind != kind) fail(t, std::string("expected ") + what);
    }
    void end_entry() {
        const Token& t = peek();
        if (t.kind == Tok::Comma || t.kind == Tok::Newline || t.kind == Tok::End) return;
        fail(t, "expected ',' or end of line after entry");
    }

    void parse_vertices() {
        for (skip_separators(); !at_section_end(); skip_separators()) vertices_.push_back(expect_label("a vertex label"));
    }
    void parse_arrows() {
        for (skip_separators(); !at_section_end(); skip_separators()) {
            ArrowEntry e;
            e.label = expect_label("an arrow label");
            expect(Tok::Colon, "':' after the arrow label");
            e.source = expect_label("a source vertex");
            expect(Tok::Arrow, "'->'");
            e.target = expect_label("a target vertex");
            end_entry();
            arrows_.push_back(std::move(e));
        }
    }
    void parse_relations() {
        for (skip_separators(); !at_section_end(); skip_separators()) {
            Token a = expect_label("an arrow label");
            Token b = expect_label("a second arrow label");
            end_entry();
            relations_.emplace_back(std::move(a), std::move(b));
        }
    }
    void parse_char() {
        while (peek().kind == Tok::Newline) ++pos_;
        const Token& t = next();
        if (t.kind != Tok::Label || !std::all_of(t.text.begin(), t.text.end(), ::isdigit) || t.text.size() > 9)
            fail(t, "expected a characteristic (0 or a prime)");
        std::uint32_t p = static_cast<std::uint32_t>(std::stoul(t.text));
        if (p != 0 && !is_prime(p)) fail(t, "characteristic " + t.text + " is neither 0 nor prime");
        end_entry();
        char_ = p;
    }

    QuiverFile build() {
        BoundQuiver::Builder b;
        std::set<std::string> labels;
        for (const auto& v : vertices_) {
            if (!labels.insert(v.text).second) fail(v, "duplicate label '" + v.text + "'");
            b.add_vertex(v.text);
        }
        std::map<std::string, ArrowId> arrows;
        for (const auto& e : arrows_) {
            if (!labels.insert(e.label.text).second) fail(e.label, "duplicate label '" + e.label.text + "'");
            for (const Token* end : {&e.source, &e.target})
                if (!b.vertex_by_label(end->text)) fail(*end, "unknown vertex '" + end->text + "'");
            arrows[e.label.text] = b.add_arrow(e.label.text, e.source.text, e.target.text);
        }
        for (const auto& [x, y] : relations_) {
            for (const Token* t : {&x, &y})
                if (!arrows.contains(t->text)) fail(*t, "unknown arrow '" + t->text + "'");
            try {
                b.add_relation(arrows.at(x.text), arrows.at(y.text));
            } catch (const QuiverError& err) {
                fail(x, err.what());
            }
        }
        return {b.build(), Field(char_)};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> seen_;
    std::vector<Token> vertices_;
    std::vector<ArrowEntry> arrows_;
    std::vector<std::pair<Token, Token>> relations_;
    std::uint32_t char_ = 0;
};

}  // namespace

QuiverFile parse_quiver(const std::string& text) { return Parser(lex(text)).run(); }

QuiverFile load_quiver(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_quiver(ss.str());
}

std::string emit_quiver(const BoundQuiver& bq, const Field& field) {
    std::string out = "vertices:";
    for (const auto& v : bq.vertex_labels()) out += " " + v;
    out += "\narrows:\n";
    for (const auto& a : bq.arrows())
        out += "  " + a.label + ": " + bq.vertex_label(a.source) + " -> " + bq.vertex_label(a.target) + "\n";
    out += "relations:\n";
    for (const auto& [x, y] : bq.relations()) out += "  " + bq.arrow(x).label + " " + bq.arrow(y).label + "\n";
    out += "char: " + std::to_string(field.characteristic()) + "\n";
    return out;
}

}  // namespace quiverhh
