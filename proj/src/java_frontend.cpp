#include "ufold/frontend.hpp"

#include <memory>
#include <utility>

#include "java/java_parser.hpp"

namespace ufold {

namespace {

class JavaFrontend final : public LanguageFrontend {
 public:
  std::string_view name() const override { return "java"; }

  bool handles(const std::filesystem::path& file) const override {
    return file.extension() == ".java";
  }

  std::vector<std::string> default_globs() const override {
    return {"**/*.java"};
  }

  SyntaxTree parse(std::string text,
                   const std::string& source_id) const override {
    auto source = std::make_shared<const std::string>(std::move(text));
    SyntaxNode root = java::parse_compilation_unit(*source, source_id);
    return SyntaxTree(std::move(root), source_id, std::move(source));
  }
};

}  // namespace

const LanguageFrontend& java_frontend() {
  static const JavaFrontend instance;
  return instance;
}

const LanguageFrontend* frontend_for_path(const std::filesystem::path& file) {
  if (java_frontend().handles(file)) return &java_frontend();
  return nullptr;
}

}  // namespace ufold
