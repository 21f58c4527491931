#include "zernike/text_sink.hpp"

#include <ostream>

#include "zernike/errors.hpp"

namespace zernike {

void StreamSink::write(std::string_view fragment) {
  if (!*os_) throw IoError("output stream is not writable");
  os_->write(fragment.data(), static_cast<std::streamsize>(fragment.size()));
  if (!*os_) throw IoError("write to output stream failed");
}

}  // namespace zernike
