#include "qdc/state_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace qdc {

namespace {

std::string trimmed(std::string line) {
  const size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  const size_t begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const size_t end = line.find_last_not_of(" \t\r\n");
  return line.substr(begin, end - begin + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

[[noreturn]] void fail(int line_number, const std::string& message) {
  throw Error(ErrorCode::syntax_error, "line " + std::to_string(line_number) + ": " + message);
}

double parse_number(const std::string& token, int line_number) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line_number, "cannot parse '" + token + "' as a number");
  }
  return value;
}

PartyLayout layout_from_header(const std::vector<int>& dims, const std::vector<Role>& roles) {
  std::vector<Party> parties;
  int senders = 0, receivers = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    const std::string label = (roles[i] == Role::sender) ? "A" + std::to_string(++senders)
                                                         : "B" + std::to_string(++receivers);
    parties.push_back({label, dims[i], roles[i]});
  }
  return PartyLayout(std::move(parties));
}

}  // namespace

DensityState parse_state_file(const std::string& text) {
  std::istringstream stream(text);
  std::string raw_line;
  int line_number = 0;
  int stage = 0;  // dims, roles, kind, numbers

  std::vector<int> dims;
  std::vector<Role> roles;
  bool pure = false;
  std::vector<double> numbers;

  while (std::getline(stream, raw_line)) {
    ++line_number;
    const std::string line = trimmed(raw_line);
    if (line.empty()) continue;

    if (stage == 0) {
      if (!line.starts_with("dims:")) fail(line_number, "expected 'dims: d1 d2 ...'");
      for (const std::string& token : tokens_of(line.substr(5))) {
        int dim = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), dim);
        if (ec != std::errc() || ptr != token.data() + token.size() || dim < 2) {
          fail(line_number, "invalid dimension '" + token + "' (need integers >= 2)");
        }
        dims.push_back(dim);
      }
      if (dims.empty()) fail(line_number, "dims line lists no dimensions");
      stage = 1;
    } else if (stage == 1) {
      if (!line.starts_with("roles:")) fail(line_number, "expected 'roles: S|R ...'");
      for (const std::string& token : tokens_of(line.substr(6))) {
        if (token == "S") {
          roles.push_back(Role::sender);
        } else if (token == "R") {
          roles.push_back(Role::receiver);
        } else {
          fail(line_number, "invalid role '" + token + "' (need S or R)");
        }
      }
      if (roles.size() != dims.size()) {
        fail(line_number, "role count does not match the dims line");
      }
      stage = 2;
    } else if (stage == 2) {
      if (!line.starts_with("kind:")) fail(line_number, "expected 'kind: pure|mixed'");
      const std::vector<std::string> kind = tokens_of(line.substr(5));
      if (kind.size() != 1 || (kind[0] != "pure" && kind[0] != "mixed")) {
        fail(line_number, "kind must be 'pure' or 'mixed'");
      }
      pure = kind[0] == "pure";
      stage = 3;
    } else {
      for (const std::string& token : tokens_of(line)) {
        numbers.push_back(parse_number(token, line_number));
      }
    }
  }
  if (stage != 3) {
    throw Error(ErrorCode::syntax_error, "missing header (need dims:, roles:, kind: lines)");
  }

  long total = 1;
  for (int d : dims) total *= d;
  const size_t expected = pure ? 2 * static_cast<size_t>(total)
                               : 2 * static_cast<size_t>(total) * static_cast<size_t>(total);
  if (numbers.size() != expected) {
    throw Error(ErrorCode::syntax_error,
                "body has " + std::to_string(numbers.size()) + " numbers, expected " +
                    std::to_string(expected) + " (" + (pure ? "pure" : "mixed") +
                    " body of 're im' pairs)");
  }

  PartyLayout layout = layout_from_header(dims, roles);
  if (pure) {
    Vector amplitudes(total);
    for (long i = 0; i < total; ++i) {
      amplitudes(i) = Complex(numbers[2 * static_cast<size_t>(i)],
                              numbers[2 * static_cast<size_t>(i) + 1]);
    }
    return from_pure(amplitudes, std::move(layout));
  }
  Matrix rho(total, total);
  size_t k = 0;
  for (long r = 0; r < total; ++r) {
    for (long c = 0; c < total; ++c, k += 2) {
      rho(r, c) = Complex(numbers[k], numbers[k + 1]);
    }
  }
  return {std::move(layout), std::move(rho)};
}

DensityState load_state_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream content;
  content << file.rdbuf();
  return parse_state_file(content.str());
}

std::string format_state_file(const DensityState& s) {
  const PartyLayout& layout = s.layout();
  std::ostringstream out;
  out << "# density state on";
  for (const Party& p : layout.parties()) out << ' ' << p.label;
  out << '\n';
  out << "dims:";
  for (const Party& p : layout.parties()) out << ' ' << p.dim;
  out << '\n';
  out << "roles:";
  for (const Party& p : layout.parties()) out << ' ' << (p.role == Role::sender ? 'S' : 'R');
  out << '\n';
  out << "kind: mixed\n";
  char buf[64];
  for (long r = 0; r < s.dim(); ++r) {
    for (long c = 0; c < s.dim(); ++c) {
      const Complex value = s.matrix()(r, c);
      std::snprintf(buf, sizeof(buf), "%.17g %.17g", value.real(), value.imag());
      out << buf << (c + 1 == s.dim() ? "" : "  ");
    }
    out << '\n';
  }
  return out.str();
}

void write_state_file(const DensityState& s, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  file << format_state_file(s);
  if (!file) throw Error(ErrorCode::io_error, "failed to write '" + path + "'");
}

}  // namespace qdc
