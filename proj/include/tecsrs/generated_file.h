#ifndef TECSRS_GENERATED_FILE_H_
#define TECSRS_GENERATED_FILE_H_

#include <string>

namespace tecsrs {

enum class WritePolicy { kOverwrite, kSkipIfExists };

enum class FileRole { kContract, kDefinition, kSkeleton, kConfig };

struct GeneratedFile {
  std::string path;     // relative to the output directory
  std::string content;  // UTF-8, LF line endings, one trailing newline
  WritePolicy policy = WritePolicy::kOverwrite;
  FileRole role = FileRole::kContract;

  bool operator==(const GeneratedFile&) const = default;
};

}  // namespace tecsrs

#endif  // TECSRS_GENERATED_FILE_H_
