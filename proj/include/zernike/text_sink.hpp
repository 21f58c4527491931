#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace zernike {

/// Append-only character stream that emitters write into.
class TextSink {
public:
  virtual ~TextSink() = default;
  /// Throws IoError when the fragment cannot be written.
  virtual void write(std::string_view fragment) = 0;

  TextSink& operator<<(std::string_view fragment) {
    write(fragment);
    return *this;
  }
};

class StringSink final : public TextSink {
public:
  void write(std::string_view fragment) override { buffer_.append(fragment); }
  const std::string& str() const noexcept { return buffer_; }
  std::string take() noexcept { return std::move(buffer_); }

private:
  std::string buffer_;
};

/// Writes through to a std::ostream (file, stdout, ...).
class StreamSink final : public TextSink {
public:
  explicit StreamSink(std::ostream& os) : os_(&os) {}
  void write(std::string_view fragment) override;

private:
  std::ostream* os_;
};

}  // namespace zernike
