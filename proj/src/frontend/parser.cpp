#include "spine/frontend/parser.hpp"

#include <cctype>
#include <sstream>

namespace spine::frontend {

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

enum class Tok { Name, Number, Colon, Dot, Tilde, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int column = 0;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '\'';
}

class LineLexer {
 public:
  LineLexer(std::string_view line, int line_no, std::vector<Diagnostic>& diags)
      : line_(line), line_no_(line_no), diags_(diags) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line_.size()) {
      const char c = line_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') break;
      Token t;
      t.column = static_cast<int>(i) + 1;
      if (name_start(c)) {
        std::size_t j = i;
        while (j < line_.size() && name_char(line_[j])) ++j;
        t.kind = Tok::Name;
        t.text = std::string(line_.substr(i, j - i));
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < line_.size() && std::isdigit(static_cast<unsigned char>(line_[j]))) ++j;
        t.kind = Tok::Number;
        t.text = std::string(line_.substr(i, j - i));
        i = j;
      } else {
        switch (c) {
          case ':': t.kind = Tok::Colon; break;
          case '.': t.kind = Tok::Dot; break;
          case '~': t.kind = Tok::Tilde; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          default:
            diags_.push_back({line_no_, t.column, std::string("unexpected character '") + c + "'"});
            return {};
        }
        t.text = std::string(1, c);
        ++i;
      }
      out.push_back(std::move(t));
    }
    Token end;
    end.column = static_cast<int>(line_.size()) + 1;
    out.push_back(end);
    return out;
  }

 private:
  std::string_view line_;
  int line_no_;
  std::vector<Diagnostic>& diags_;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Name: return "a name";
    case Tok::Number: return "a number";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Tilde: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of line";
  }
  return "?";
}

struct SyntaxError {
  int column;
  std::string message;
};

class LineParser {
 public:
  LineParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }

  const Token& expect(Tok kind, const char* what = nullptr) {
    const Token& t = toks_[pos_];
    if (t.kind != kind)
      throw SyntaxError{t.column, std::string("expected ") + (what ? what : describe(kind)) +
                                      ", found " +
                                      (t.kind == Tok::End ? "end of line" : "'" + t.text + "'")};
    ++pos_;
    return t;
  }

  int number(const char* what) {
    const Token& t = expect(Tok::Number, what);
    if (t.text.size() > 9) throw SyntaxError{t.column, std::string(what) + " is out of range"};
    return std::stoi(t.text);
  }

  void finish() { expect(Tok::End); }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

TEndSlot parse_slot(LineParser& p) {
  TEndSlot s;
  s.piece = p.expect(Tok::Name, "a piece name").text;
  p.expect(Tok::Dot);
  s.t_end = p.number("a T-end number");
  return s;
}

}  // namespace

ParseResult parse_spec(std::string_view text) {
  ParseResult result;
  GluingSpec spec;
  bool saw_disks_all = false;
  bool saw_disk = false;
  bool saw_disks_none = false;
  std::vector<int> disk_curves;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    auto toks = LineLexer(line, line_no, result.diagnostics).tokenize();
    if (toks.empty() || toks.front().kind == Tok::End) continue;

    LineParser p(std::move(toks));
    try {
      const Token& kw = p.expect(Tok::Name, "a keyword (piece, match, disks, disk)");
      if (kw.text == "piece") {
        Piece piece;
        piece.name = p.expect(Tok::Name, "a piece name").text;
        const Token& kind = p.expect(Tok::Name, "'vertex' or 'bar'");
        if (kind.text == "vertex") piece.kind = PieceKind::Vertex;
        else if (kind.text == "bar") piece.kind = PieceKind::Bar;
        else throw SyntaxError{kind.column, "expected 'vertex' or 'bar', found '" + kind.text + "'"};
        p.finish();
        spec.pieces.push_back(std::move(piece));
      } else if (kw.text == "match") {
        Matching m;
        m.id = p.expect(Tok::Name, "a matching id").text;
        p.expect(Tok::Colon);
        m.left = parse_slot(p);
        p.expect(Tok::Tilde);
        m.right = parse_slot(p);
        p.expect(Tok::LParen);
        int img[3];
        for (int& v : img) {
          const int col = p.peek().column;
          v = p.number("a prong number");
          if (v < 1 || v > 3) throw SyntaxError{col, "prong numbers are 1, 2 or 3"};
        }
        p.expect(Tok::RParen);
        p.finish();
        m.perm = Perm3(img[0], img[1], img[2]);
        spec.matchings.push_back(std::move(m));
      } else if (kw.text == "disks") {
        const Token& which = p.expect(Tok::Name, "'all' or 'none'");
        if (which.text != "all" && which.text != "none")
          throw SyntaxError{which.column, "expected 'all' or 'none', found '" + which.text + "'"};
        p.finish();
        if (saw_disk || saw_disks_all)
          throw SyntaxError{kw.column, "conflicting disk declarations"};
        saw_disks_all = true;
        if (which.text == "none") saw_disks_none = true;
      } else if (kw.text == "disk") {
        const int col = p.peek().column;
        const int idx = p.number("a curve index");
        if (idx < 1) throw SyntaxError{col, "curve indices start at 1"};
        p.finish();
        if (saw_disks_all) throw SyntaxError{kw.column, "'disk' conflicts with an earlier 'disks' line"};
        saw_disk = true;
        disk_curves.push_back(idx);
      } else {
        throw SyntaxError{kw.column, "unknown keyword '" + kw.text + "'"};
      }
    } catch (const SyntaxError& e) {
      result.diagnostics.push_back({line_no, e.column, e.message});
    }
  }

  if (saw_disks_none) spec.disks = DiskPolicy::explicit_curves({});
  if (saw_disk) spec.disks = DiskPolicy::explicit_curves(std::move(disk_curves));
  if (result.diagnostics.empty()) result.spec = std::move(spec);
  return result;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error([&] {
        std::string msg = "spec parse failed";
        for (const auto& d : diagnostics) msg += "\n  " + d.to_string();
        return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

GluingSpec parse_spec_or_throw(std::string_view text) {
  auto r = parse_spec(text);
  if (!r.ok()) throw ParseError(std::move(r.diagnostics));
  return std::move(*r.spec);
}

std::string print_spec(const GluingSpec& spec) {
  std::ostringstream os;
  for (const auto& p : spec.pieces) os << "piece " << p.name << ' ' << to_string(p.kind) << '\n';
  for (const auto& m : spec.matchings)
    os << "match " << m.id << ": " << m.left.piece << '.' << m.left.t_end << " ~ " << m.right.piece
       << '.' << m.right.t_end << ' ' << m.perm.to_string() << '\n';
  if (spec.disks.is_all()) {
    os << "disks all\n";
  } else if (spec.disks.curves().empty()) {
    os << "disks none\n";
  } else {
    for (int c : spec.disks.curves()) os << "disk " << c << '\n';
  }
  return os.str();
}

}  // namespace spine::frontend
