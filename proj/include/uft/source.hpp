#ifndef UFT_SOURCE_HPP
#define UFT_SOURCE_HPP

namespace uft {

// Half-open source range; line/col are 1-based, columns count codepoints.
struct Span {
  int line = 0;
  int col = 0;
  int endLine = 0;
  int endCol = 0;

  bool valid() const { return line > 0; }
};

}  // namespace uft

#endif
