// Copyright 2026 The dockguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dockguard/config.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <regex>

#include "dockguard/error.hpp"

namespace dockguard {
namespace {

bool parse_u32(std::string_view s, std::uint32_t& out) {
    if (s.empty() || s.size() > 9) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

void require_absolute(const std::string& p, const std::string& path) {
    if (p.empty() || p.front() != '/') throw ValueError(path + ": path must be absolute, got '" + p + "'");
}

std::uint64_t positive(std::int64_t v, const std::string& path) {
    if (v <= 0) throw ValueError(path + ": must be a positive integer");
    return static_cast<std::uint64_t>(v);
}

std::optional<std::uint64_t> read_size(ObjectReader& r, std::string_view key) {
    const Json* v = r.find(key);
    if (v == nullptr) return std::nullopt;
    if (v->is_string()) {
        try {
            return parse_byte_size(v->get<std::string>());
        } catch (const ValueError& e) {
            throw ValueError(r.child(key) + ": " + e.what());
        }
    }
    return positive(expect_int(*v, r.child(key)), r.child(key));
}

void validate_cpuset(const std::string& s, const std::string& path) {
    static const std::regex re(R"(^[0-9]+(-[0-9]+)?(,[0-9]+(-[0-9]+)?)*$)");
    if (!std::regex_match(s, re)) throw ValueError(path + ": malformed cpuset '" + s + "'");
}

void validate_env(const std::string& entry, const std::string& path) {
    auto eq = entry.find('=');
    if (eq == 0 || entry.empty()) throw ValueError(path + ": env entry has an empty key");
}

void validate_name(const std::string& name, const std::string& path) {
    if (name.empty()) throw ValueError(path + ": container name is empty");
    if (name == "daemon") throw ValueError(path + ": 'daemon' is a reserved subject name");
}

std::uint16_t port(std::int64_t v, const std::string& path) {
    if (v < 1 || v > 65535) throw ValueError(path + ": port out of range");
    return static_cast<std::uint16_t>(v);
}

Json doc_root(std::string_view document) { return parse_json_document(document); }

std::vector<std::string> cap_tokens(ObjectReader& r, std::string_view key) {
    return r.string_array(key);
}

CapabilitySet apply_caps(const CapabilitySet& base, const std::vector<std::string>& add,
                         const std::vector<std::string>& drop, const std::string& path) {
    try {
        return effective_capabilities(base, add, drop);
    } catch (const ValueError& e) {
        throw ValueError(path + ": " + e.what());
    }
}

}  // namespace

// --- Version -------------------------------------------------------------

Version Version::parse(std::string_view text) {
    Version v;
    std::uint32_t parts[3] = {0, 0, 0};
    std::size_t n = 0;
    std::string_view rest = text;
    while (true) {
        auto dot = rest.find('.');
        std::string_view part = rest.substr(0, dot);
        if (n == 3 || !parse_u32(part, parts[n])) {
            throw ValueError("malformed version '" + std::string(text) + "'");
        }
        ++n;
        if (dot == std::string_view::npos) break;
        rest = rest.substr(dot + 1);
    }
    if (n < 2) throw ValueError("malformed version '" + std::string(text) + "'");
    v.major = parts[0];
    v.minor = parts[1];
    v.patch = parts[2];
    v.has_patch = n == 3;
    return v;
}

std::string Version::to_string() const {
    std::string s = std::to_string(major) + "." + std::to_string(minor);
    if (has_patch) s += "." + std::to_string(patch);
    return s;
}

std::uint64_t parse_byte_size(std::string_view text) {
    if (text.empty()) throw ValueError("empty size");
    std::uint64_t mult = 1;
    std::string_view digits = text;
    switch (text.back()) {
        case 'b': case 'B': digits.remove_suffix(1); break;
        case 'k': case 'K': mult = 1024ULL; digits.remove_suffix(1); break;
        case 'm': case 'M': mult = 1024ULL * 1024; digits.remove_suffix(1); break;
        case 'g': case 'G': mult = 1024ULL * 1024 * 1024; digits.remove_suffix(1); break;
        default: break;
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw ValueError("malformed size '" + std::string(text) + "'");
    }
    std::uint64_t n = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || p != digits.data() + digits.size() ||
        n > std::numeric_limits<std::uint64_t>::max() / mult) {
        throw ValueError("size out of range '" + std::string(text) + "'");
    }
    if (n == 0) throw ValueError("size must be positive");
    return n * mult;
}

// --- small enums and value types ----------------------------------------

DevicePerms DevicePerms::parse(std::string_view text) {
    DevicePerms p;
    for (char c : text) {
        bool* slot = c == 'r' ? &p.read : c == 'w' ? &p.write : c == 'm' ? &p.mknod : nullptr;
        if (slot == nullptr || *slot) throw ValueError("malformed device permissions '" + std::string(text) + "'");
        *slot = true;
    }
    if (!p.any()) throw ValueError("device permissions must be non-empty");
    return p;
}

std::string DevicePerms::to_string() const {
    std::string s;
    if (read) s += 'r';
    if (write) s += 'w';
    if (mknod) s += 'm';
    return s;
}

bool SecurityOptions::apply(std::string_view opt) {
    // Both the historic `label:type:X` and current `label=type:X` spellings.
    for (char sep : {':', '='}) {
        const std::string label = std::string("label") + sep;
        const std::pair<std::string_view, std::optional<std::string>*> fields[] = {
            {"user:", &selinux_user},
            {"role:", &selinux_role},
            {"type:", &selinux_type},
            {"level:", &selinux_level},
        };
        for (auto [field, slot] : fields) {
            const std::string prefix = label + std::string(field);
            if (opt.starts_with(prefix) && opt.size() > prefix.size()) {
                *slot = std::string(opt.substr(prefix.size()));
                return true;
            }
        }
        const std::string apparmor = std::string("apparmor") + sep;
        if (opt.starts_with(apparmor) && opt.size() > apparmor.size()) {
            apparmor_profile = std::string(opt.substr(apparmor.size()));
            return true;
        }
    }
    return false;
}

std::vector<std::string> SecurityOptions::to_security_opts() const {
    std::vector<std::string> out;
    if (selinux_user) out.push_back("label:user:" + *selinux_user);
    if (selinux_role) out.push_back("label:role:" + *selinux_role);
    if (selinux_type) out.push_back("label:type:" + *selinux_type);
    if (selinux_level) out.push_back("label:level:" + *selinux_level);
    if (apparmor_profile) out.push_back("apparmor:" + *apparmor_profile);
    return out;
}

std::string_view to_string(NetworkMode m) {
    switch (m) {
        case NetworkMode::Bridge: return "bridge";
        case NetworkMode::Host: return "host";
        case NetworkMode::None: return "none";
        case NetworkMode::Custom: return "custom";
    }
    return "bridge";
}

NetworkMode network_mode_from_string(std::string_view s) {
    if (s == "bridge") return NetworkMode::Bridge;
    if (s == "host") return NetworkMode::Host;
    if (s == "none") return NetworkMode::None;
    if (s == "custom") return NetworkMode::Custom;
    throw ValueError("unknown network mode '" + std::string(s) + "'");
}

std::string_view to_string(RegistryOrigin o) {
    switch (o) {
        case RegistryOrigin::OfficialHub: return "official_hub";
        case RegistryOrigin::Private: return "private";
        case RegistryOrigin::LocalLoad: return "local_load";
        case RegistryOrigin::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

RegistryOrigin origin_from_string(std::string_view s, const std::string& path) {
    if (s == "official_hub") return RegistryOrigin::OfficialHub;
    if (s == "private") return RegistryOrigin::Private;
    if (s == "local_load") return RegistryOrigin::LocalLoad;
    if (s == "unknown") return RegistryOrigin::Unknown;
    throw ValueError(path + ": unknown registry origin '" + std::string(s) + "'");
}

ExecutionDriver driver_from_string(std::string_view s, const std::string& path) {
    if (s == "libcontainer") return ExecutionDriver::Libcontainer;
    if (s == "lxc") return ExecutionDriver::Lxc;
    throw ValueError(path + ": unknown execution driver '" + std::string(s) + "'");
}

Version version_at(ObjectReader& r, std::string_view key) {
    std::string text = r.required_string(key);
    try {
        return Version::parse(text);
    } catch (const ValueError& e) {
        throw ValueError(r.child(key) + ": " + e.what());
    }
}

}  // namespace

// --- native container schema --------------------------------------------

ContainerConfig container_from_json(const Json& value, const std::string& path,
                                    const CapabilitySet& defaults, ParseDiagnostics* diag) {
    ObjectReader r(value, path);
    ContainerConfig c;
    c.name = r.required_string("name");
    validate_name(c.name, r.child("name"));
    c.image_ref = r.required_string("image");
    c.privileged = r.required_bool("privileged");
    c.security.read_only_rootfs = r.required_bool("read_only_rootfs");

    CapabilitySet base = defaults;
    if (r.has("capabilities")) {
        base = apply_caps({}, cap_tokens(r, "capabilities"), {}, r.child("capabilities"));
    }
    auto add = cap_tokens(r, "cap_add");
    auto drop = cap_tokens(r, "cap_drop");
    c.capabilities = apply_caps(base, add, drop, path);

    if (auto v = r.optional_int("cpu_shares")) c.limits.cpu_shares = positive(*v, r.child("cpu_shares"));
    if (auto v = r.optional_string("cpuset")) {
        validate_cpuset(*v, r.child("cpuset"));
        c.limits.cpuset = *v;
    }
    c.limits.memory_bytes = read_size(r, "memory");
    c.limits.storage_base_bytes = read_size(r, "storage_base");

    if (const Json* devs = r.optional_array("devices")) {
        for (std::size_t i = 0; i < devs->size(); ++i) {
            ObjectReader d((*devs)[i], json_pointer_append(r.child("devices"), i));
            DeviceGrant g;
            g.host_path = d.required_string("host_path");
            require_absolute(g.host_path, d.child("host_path"));
            g.container_path = d.required_string("container_path");
            require_absolute(g.container_path, d.child("container_path"));
            try {
                g.perms = DevicePerms::parse(d.optional_string("perms").value_or("rwm"));
            } catch (const ValueError& e) {
                throw ValueError(d.child("perms") + ": " + e.what());
            }
            if (auto intent = d.optional_string("intent")) {
                if (*intent != "r") throw ValueError(d.child("intent") + ": only \"r\" is supported");
                g.read_only_intent = true;
            }
            d.report_unknown(diag);
            c.devices.push_back(std::move(g));
        }
    }

    if (const Json* vols = r.optional_array("volumes")) {
        for (std::size_t i = 0; i < vols->size(); ++i) {
            ObjectReader v((*vols)[i], json_pointer_append(r.child("volumes"), i));
            VolumeMount m;
            m.host_path = v.required_string("host_path");
            require_absolute(m.host_path, v.child("host_path"));
            m.container_path = v.required_string("container_path");
            require_absolute(m.container_path, v.child("container_path"));
            m.read_only = v.optional_bool("read_only").value_or(false);
            m.nosuid = v.optional_bool("nosuid").value_or(false);
            v.report_unknown(diag);
            c.volumes.push_back(std::move(m));
        }
    }

    auto opts = r.string_array("security_opt");
    for (std::size_t i = 0; i < opts.size(); ++i) {
        if (!c.security.apply(opts[i]) && diag != nullptr) {
            diag->ignored_paths.push_back(json_pointer_append(r.child("security_opt"), i));
        }
    }
    c.security.seccomp_restricted = r.optional_bool("seccomp_restricted").value_or(false);

    c.run_user = r.optional_string("user");
    if (c.run_user && c.run_user->empty()) c.run_user.reset();

    c.env = r.string_array("env");
    for (std::size_t i = 0; i < c.env.size(); ++i) {
        validate_env(c.env[i], json_pointer_append(r.child("env"), i));
    }

    if (auto mode = r.optional_string("network_mode")) {
        try {
            c.network_mode = network_mode_from_string(*mode);
        } catch (const ValueError& e) {
            throw ValueError(r.child("network_mode") + ": " + e.what());
        }
    }
    if (const Json* ports = r.optional_array("published_ports")) {
        for (std::size_t i = 0; i < ports->size(); ++i) {
            ObjectReader p((*ports)[i], json_pointer_append(r.child("published_ports"), i));
            PortMapping pm;
            pm.host_port = port(expect_int(p.required("host"), p.child("host")), p.child("host"));
            pm.container_port =
                port(expect_int(p.required("container"), p.child("container")), p.child("container"));
            p.report_unknown(diag);
            c.published_ports.push_back(pm);
        }
    }
    c.sensitive_services = r.string_array("sensitive_services");
    c.ebtables_antispoof = r.optional_bool("ebtables_antispoof").value_or(false);

    r.report_unknown(diag);
    return c;
}

Json to_json(const ContainerConfig& c) {
    Json j = Json::object();
    j["name"] = c.name;
    j["image"] = c.image_ref;
    j["privileged"] = c.privileged;
    j["read_only_rootfs"] = c.security.read_only_rootfs;
    j["seccomp_restricted"] = c.security.seccomp_restricted;
    j["capabilities"] = c.capabilities.names();
    if (c.limits.cpu_shares) j["cpu_shares"] = *c.limits.cpu_shares;
    if (c.limits.cpuset) j["cpuset"] = *c.limits.cpuset;
    if (c.limits.memory_bytes) j["memory"] = *c.limits.memory_bytes;
    if (c.limits.storage_base_bytes) j["storage_base"] = *c.limits.storage_base_bytes;
    j["devices"] = Json::array();
    for (const auto& d : c.devices) {
        Json dj = {{"host_path", d.host_path},
                   {"container_path", d.container_path},
                   {"perms", d.perms.to_string()}};
        if (d.read_only_intent) dj["intent"] = "r";
        j["devices"].push_back(std::move(dj));
    }
    j["volumes"] = Json::array();
    for (const auto& v : c.volumes) {
        j["volumes"].push_back({{"host_path", v.host_path},
                                {"container_path", v.container_path},
                                {"read_only", v.read_only},
                                {"nosuid", v.nosuid}});
    }
    j["security_opt"] = c.security.to_security_opts();
    if (c.run_user) j["user"] = *c.run_user;
    j["env"] = c.env;
    j["network_mode"] = std::string(to_string(c.network_mode));
    j["published_ports"] = Json::array();
    for (const auto& p : c.published_ports) {
        j["published_ports"].push_back({{"host", p.host_port}, {"container", p.container_port}});
    }
    j["sensitive_services"] = c.sensitive_services;
    j["ebtables_antispoof"] = c.ebtables_antispoof;
    return j;
}

// --- inspect subset -------------------------------------------------------

namespace {

void apply_bind(ContainerConfig& c, const std::string& bind, const std::string& path) {
    // host:container[:opt,opt]
    auto first = bind.find(':');
    if (first == std::string::npos) throw ValueError(path + ": malformed bind '" + bind + "'");
    auto second = bind.find(':', first + 1);
    VolumeMount m;
    m.host_path = bind.substr(0, first);
    m.container_path = bind.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1);
    require_absolute(m.host_path, path);
    require_absolute(m.container_path, path);
    if (second != std::string::npos) {
        std::string_view opts = std::string_view(bind).substr(second + 1);
        while (!opts.empty()) {
            auto comma = opts.find(',');
            std::string_view o = opts.substr(0, comma);
            if (o == "ro") m.read_only = true;
            if (o == "nosuid") m.nosuid = true;
            opts = comma == std::string_view::npos ? std::string_view{} : opts.substr(comma + 1);
        }
    }
    c.volumes.push_back(std::move(m));
}

bool label_true(const std::string& v) { return v == "true" || v == "1" || v == "yes"; }

}  // namespace

ContainerConfig container_from_inspect(const Json& value, const std::string& path,
                                       const CapabilitySet& defaults, ParseDiagnostics* diag) {
    const Json* obj = &value;
    std::string base = path;
    if (value.is_array()) {
        if (value.size() != 1) throw SchemaError(path.empty() ? "/" : path, "expected exactly one inspect entry");
        obj = &value[0];
        base = json_pointer_append(path, std::size_t{0});
    }
    ObjectReader top(*obj, base);
    ContainerConfig c;

    c.name = top.required_string("Name");
    if (c.name.starts_with('/')) c.name.erase(0, 1);
    validate_name(c.name, top.child("Name"));

    ObjectReader cfg(top.required("Config"), top.child("Config"));
    c.image_ref = cfg.required_string("Image");
    c.run_user = cfg.optional_string("User");
    if (c.run_user && c.run_user->empty()) c.run_user.reset();
    c.env = cfg.string_array("Env");
    for (std::size_t i = 0; i < c.env.size(); ++i) {
        validate_env(c.env[i], json_pointer_append(cfg.child("Env"), i));
    }
    if (const Json* labels = cfg.optional_object("Labels")) {
        const std::string lp = cfg.child("Labels");
        if (auto it = labels->find("dockguard.sensitive_services"); it != labels->end()) {
            std::string s = expect_string(*it, json_pointer_append(lp, "dockguard.sensitive_services"));
            std::string_view rest = s;
            while (!rest.empty()) {
                auto comma = rest.find(',');
                if (auto item = rest.substr(0, comma); !item.empty()) c.sensitive_services.emplace_back(item);
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        }
        if (auto it = labels->find("dockguard.ebtables_antispoof"); it != labels->end()) {
            c.ebtables_antispoof =
                label_true(expect_string(*it, json_pointer_append(lp, "dockguard.ebtables_antispoof")));
        }
    }
    cfg.report_unknown(nullptr);

    ObjectReader host(top.required("HostConfig"), top.child("HostConfig"));
    c.privileged = host.required_bool("Privileged");
    c.security.read_only_rootfs = host.required_bool("ReadonlyRootfs");
    c.capabilities = apply_caps(defaults, host.string_array("CapAdd"), host.string_array("CapDrop"),
                                host.path());

    if (auto v = host.optional_int("CpuShares"); v && *v != 0) c.limits.cpu_shares = positive(*v, host.child("CpuShares"));
    if (auto v = host.optional_string("CpusetCpus"); v && !v->empty()) {
        validate_cpuset(*v, host.child("CpusetCpus"));
        c.limits.cpuset = *v;
    }
    if (auto v = host.optional_int("Memory"); v && *v != 0) c.limits.memory_bytes = positive(*v, host.child("Memory"));
    if (const Json* so = host.optional_object("StorageOpt")) {
        if (auto it = so->find("size"); it != so->end()) {
            const std::string sp = json_pointer_append(host.child("StorageOpt"), "size");
            try {
                c.limits.storage_base_bytes = parse_byte_size(expect_string(*it, sp));
            } catch (const ValueError& e) {
                throw ValueError(sp + ": " + e.what());
            }
        }
    }

    if (const Json* devs = host.optional_array("Devices")) {
        for (std::size_t i = 0; i < devs->size(); ++i) {
            ObjectReader d((*devs)[i], json_pointer_append(host.child("Devices"), i));
            DeviceGrant g;
            g.host_path = d.required_string("PathOnHost");
            require_absolute(g.host_path, d.child("PathOnHost"));
            g.container_path = d.required_string("PathInContainer");
            require_absolute(g.container_path, d.child("PathInContainer"));
            try {
                g.perms = DevicePerms::parse(d.optional_string("CgroupPermissions").value_or("rwm"));
            } catch (const ValueError& e) {
                throw ValueError(d.child("CgroupPermissions") + ": " + e.what());
            }
            c.devices.push_back(std::move(g));
        }
    }
    auto binds = host.string_array("Binds");
    for (std::size_t i = 0; i < binds.size(); ++i) {
        apply_bind(c, binds[i], json_pointer_append(host.child("Binds"), i));
    }

    c.security.seccomp_restricted = true;
    auto opts = host.string_array("SecurityOpt");
    for (std::size_t i = 0; i < opts.size(); ++i) {
        const auto& o = opts[i];
        if (o == "seccomp=unconfined" || o == "seccomp:unconfined") {
            c.security.seccomp_restricted = false;
        } else if (!c.security.apply(o) && diag != nullptr) {
            diag->ignored_paths.push_back(json_pointer_append(host.child("SecurityOpt"), i));
        }
    }
    if (auto profile = top.optional_string("AppArmorProfile");
        profile && !profile->empty() && *profile != "unconfined" && !c.security.apparmor_profile) {
        c.security.apparmor_profile = *profile;
    }

    if (auto mode = host.optional_string("NetworkMode")) {
        if (*mode == "default" || *mode == "bridge") c.network_mode = NetworkMode::Bridge;
        else if (*mode == "host") c.network_mode = NetworkMode::Host;
        else if (*mode == "none") c.network_mode = NetworkMode::None;
        else c.network_mode = NetworkMode::Custom;
    }
    if (const Json* pb = host.optional_object("PortBindings")) {
        const std::string pp = host.child("PortBindings");
        for (const auto& [spec, hosts] : pb->items()) {
            const std::string sp = json_pointer_append(pp, spec);
            std::uint32_t cport = 0;
            std::string_view num = std::string_view(spec).substr(0, spec.find('/'));
            if (!parse_u32(num, cport)) throw ValueError(sp + ": malformed port spec");
            if (!hosts.is_array()) continue;
            for (std::size_t i = 0; i < hosts.size(); ++i) {
                ObjectReader h(hosts[i], json_pointer_append(sp, i));
                std::uint32_t hport = 0;
                auto hp = h.optional_string("HostPort").value_or("");
                if (!parse_u32(hp, hport)) continue;
                c.published_ports.push_back({port(hport, h.child("HostPort")), port(cport, sp)});
            }
        }
    }

    // The inspect document is large and version-drifting; only top-level
    // leftovers are counted.
    top.report_unknown(diag);
    host.report_unknown(diag);
    return c;
}

ContainerConfig parse_container_config(std::string_view document, ConfigFormat format,
                                       ParseDiagnostics* diag) {
    Json root = doc_root(document);
    if (format == ConfigFormat::InspectJson) {
        return container_from_inspect(root, "", default_capabilities(), diag);
    }
    return container_from_json(root, "", default_capabilities(), diag);
}

// --- daemon ------------------------------------------------------------

DaemonConfig daemon_from_json(const Json& value, const std::string& path, ParseDiagnostics* diag) {
    ObjectReader r(value, path);
    DaemonConfig d;
    d.engine_version = version_at(r, "engine_version");
    d.tcp_socket_enabled = r.required_bool("tcp_socket_enabled");
    d.tls_enabled = r.required_bool("tls_enabled");
    if (r.has("icc_enabled") || !r.has("icc")) {
        d.icc_enabled = r.required_bool("icc_enabled");
        (void)r.find("icc");
    } else {
        d.icc_enabled = r.required_bool("icc");
    }
    d.selinux_enabled = r.required_bool("selinux_enabled");
    d.apparmor_available = r.required_bool("apparmor_available");
    d.userns_remap = r.required_bool("userns_remap");
    if (auto drv = r.optional_string("execution_driver")) {
        d.execution_driver = driver_from_string(*drv, r.child("execution_driver"));
    }
    d.logging_driver = r.optional_string("logging_driver");
    if (d.logging_driver && d.logging_driver->empty()) d.logging_driver.reset();
    d.kernel_version = version_at(r, "kernel_version");
    d.kernel_hardened = r.required_bool("kernel_hardened");
    d.dedicated_host = r.required_bool("dedicated_host");
    d.inside_vm = r.required_bool("inside_vm");
    r.report_unknown(diag);
    return d;
}

DaemonConfig parse_daemon_config(std::string_view document, ParseDiagnostics* diag) {
    return daemon_from_json(doc_root(document), "", diag);
}

Json to_json(const DaemonConfig& d) {
    Json j = {{"engine_version", d.engine_version.to_string()},
              {"tcp_socket_enabled", d.tcp_socket_enabled},
              {"tls_enabled", d.tls_enabled},
              {"icc_enabled", d.icc_enabled},
              {"selinux_enabled", d.selinux_enabled},
              {"apparmor_available", d.apparmor_available},
              {"userns_remap", d.userns_remap},
              {"execution_driver", d.execution_driver == ExecutionDriver::Lxc ? "lxc" : "libcontainer"},
              {"kernel_version", d.kernel_version.to_string()},
              {"kernel_hardened", d.kernel_hardened},
              {"dedicated_host", d.dedicated_host},
              {"inside_vm", d.inside_vm}};
    if (d.logging_driver) j["logging_driver"] = *d.logging_driver;
    return j;
}

// --- images ------------------------------------------------------------

ImageProvenance image_from_json(const Json& value, const std::string& path, ParseDiagnostics* diag) {
    ObjectReader r(value, path);
    ImageProvenance img;
    img.image_ref = r.required_string("image_ref");
    if (img.image_ref.empty()) throw ValueError(r.child("image_ref") + ": empty image reference");
    img.signed_manifest = r.required_bool("signed_manifest");
    img.checksum_verified = r.required_bool("checksum_verified");
    img.content_trust_enabled = r.required_bool("content_trust_enabled");
    img.registry_origin = origin_from_string(r.required_string("registry_origin"), r.child("registry_origin"));
    if (img.checksum_verified && !img.signed_manifest) {
        throw ValueError(r.child("checksum_verified") + ": a checksum can only be verified against a signed manifest");
    }
    r.report_unknown(diag);
    return img;
}

ImageProvenance parse_image_provenance(std::string_view document, ParseDiagnostics* diag) {
    return image_from_json(doc_root(document), "", diag);
}

Json to_json(const ImageProvenance& img) {
    return {{"image_ref", img.image_ref},
            {"signed_manifest", img.signed_manifest},
            {"checksum_verified", img.checksum_verified},
            {"content_trust_enabled", img.content_trust_enabled},
            {"registry_origin", std::string(to_string(img.registry_origin))}};
}

}  // namespace dockguard
