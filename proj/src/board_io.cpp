#include "torustour/board_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "torustour/tour.hpp"

namespace torustour {

namespace {

[[noreturn]] void bad_format(const std::string& what) {
  throw Error(ErrorCode::parse_error, what);
}

}  // namespace

Board read_board(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 1)
    bad_format("board header must be two positive integers \"n m\"");
  std::string rest;
  std::getline(in, rest);
  if (!rest.empty() && rest.find_first_not_of(" \t\r") != std::string::npos)
    bad_format("unexpected text after the board header");
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    std::string line;
    if (!std::getline(in, line)) bad_format("board line " + std::to_string(i) + " is missing");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != m)
      bad_format("board line " + std::to_string(i) + " must have exactly " + std::to_string(m) +
                 " characters");
    for (int j = 1; j <= m; ++j) {
      const char ch = line[j - 1];
      if (ch == '#')
        cells.push_back({i, j});
      else if (ch != '.')
        bad_format(std::string("board cells must be '#' or '.', got '") + ch + "'");
    }
  }
  return Board(n, m, cells);
}

Board board_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_board(in);
}

void write_board(std::ostream& out, const Board& board) {
  out << board.rows() << ' ' << board.cols() << '\n';
  for (int i = 1; i <= board.rows(); ++i) {
    std::string line(board.cols(), '.');
    for (int j : board.row_columns(i)) line[j - 1] = '#';
    out << line << '\n';
  }
}

std::string board_to_string(const Board& board) {
  std::ostringstream out;
  write_board(out, board);
  return out.str();
}

namespace {

std::vector<std::int8_t> parse_signs(const std::string& line, const char* what) {
  if (line.empty()) bad_format(std::string(what) + " vector line is empty");
  std::vector<std::int8_t> signs;
  signs.reserve(line.size());
  for (char ch : line) {
    if (ch == '+')
      signs.push_back(1);
    else if (ch == '-')
      signs.push_back(-1);
    else
      bad_format(std::string(what) + " vector must consist of '+' and '-' characters");
  }
  return signs;
}

std::string next_content_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  bad_format(std::string(what) + " vector line is missing");
}

}  // namespace

Orientation read_orientation(std::istream& in) {
  const std::string rows = next_content_line(in, "row");
  const std::string cols = next_content_line(in, "column");
  return Orientation(parse_signs(rows, "row"), parse_signs(cols, "column"));
}

Orientation orientation_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_orientation(in);
}

void write_orientation(std::ostream& out, const Orientation& orientation) {
  out << orientation.row_string() << '\n' << orientation.col_string() << '\n';
}

std::string orientation_to_string(const Orientation& orientation) {
  std::ostringstream out;
  write_orientation(out, orientation);
  return out.str();
}

std::string render_tour(const Board& board, const Orientation& orientation, Cell start,
                        bool ascii) {
  const Tour walk = tour(board, orientation, start);
  const int n = board.rows();
  const int m = board.cols();
  std::vector<long> label(static_cast<std::size_t>(n) * m, -1);
  for (std::size_t step = 0; step < walk.cells.size(); ++step) {
    const Cell cell = walk.cells[step];
    label[static_cast<std::size_t>(cell.row - 1) * m + (cell.col - 1)] = static_cast<long>(step);
  }
  const std::size_t max_label = walk.cells.size() - 1;
  std::size_t width = std::to_string(max_label).size();

  const char* right = ascii ? ">" : "→";
  const char* left = ascii ? "<" : "←";
  const char* down = ascii ? "v" : "↓";
  const char* up = ascii ? "^" : "↑";
  const char* missed = ascii ? "*" : "•";

  auto pad_left = [&](const std::string& text, std::size_t display_width) {
    // Arrows and the bullet are multi-byte but occupy one display column.
    const std::size_t columns = text.empty() ? 0 : (text[0] & 0x80 ? 1 : text.size());
    return std::string(display_width > columns ? display_width - columns : 0, ' ') + text;
  };

  std::ostringstream out;
  std::string header = " ";
  for (int j = 1; j <= m; ++j)
    header += ' ' + pad_left(orientation.c(j) > 0 ? down : up, width);
  out << header.substr(0, header.find_last_not_of(' ') + 1) << '\n';
  for (int i = 1; i <= n; ++i) {
    std::string line = orientation.r(i) > 0 ? right : left;
    for (int j = 1; j <= m; ++j) {
      const long value = label[static_cast<std::size_t>(i - 1) * m + (j - 1)];
      std::string cell;
      if (value >= 0)
        cell = std::to_string(value);
      else if (board.filled({i, j}))
        cell = missed;
      line += ' ' + pad_left(cell, width);
    }
    const auto end = line.find_last_not_of(' ');
    out << (end == std::string::npos ? "" : line.substr(0, end + 1)) << '\n';
  }
  return out.str();
}

}  // namespace torustour
